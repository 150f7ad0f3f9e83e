"""Closed-form clique and edge counts, exact over integers and rationals."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import OutOfDomain


def C(a: int, b: int) -> int:
    """Binomial coefficient, zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def ell(k: int) -> int:
    if k < 5:
        raise OutOfDomain(f"k={k} < 5")
    return (k - 1) // 2


def h_s(n: int, k: int, a: int, s: int) -> int:
    """Number of s-cliques of the graph H(n, k, a)."""
    if not (n >= k and k >= 2 * a and a >= 1) or s < 2:
        raise OutOfDomain(f"h_s needs n >= k >= 2a >= 2 and s >= 2, got n={n} k={k} a={a} s={s}")
    return C(k - a, s) + (n - k + a) * C(a, s - 1)


def f_s(n: int, k: int, r: int, s: int) -> int:
    l = ell(k)
    if k < 9 or n < k or not (1 <= r <= l - 2) or s < 2:
        raise OutOfDomain(f"f_s needs n >= k >= 9, 1 <= r <= l-2, s >= 2, got n={n} k={k} r={r} s={s}")
    return C(k - l, s) + C(l + 1, s) - C(l - r + 1, s) + (n - k + l - r) * C(l - r + 1, s - 1)


def g_s(n: int, k: int, s: int) -> int:
    """The displayed count for G(n, k, 3), including the parity term."""
    if k % 2 or k < 10 or n < k or s < 2:
        raise OutOfDomain(f"g_s needs even k >= 10, n >= k, s >= 2, got n={n} k={k} s={s}")
    l = ell(k)
    i = (n - k + 3) % 2
    return 2 * C(l + 1, s) - C(3, s) + (n - k + 3) // 2 * (C(5, s) - C(3, s)) + i * C(4, s)


def g_s_construction(n: int, k: int, s: int) -> int:
    """Exact s-clique count of ``build_gnk3(n, k)``.

    Agrees with ``g_s`` when n-k+3 is even.  For odd n-k+3 the leftover vertex
    sits in one copy of K_4 together with C, contributing C(4,s)-C(3,s) new
    s-cliques rather than C(4,s).
    """
    if k % 2 or k < 10 or n < k or s < 2:
        raise OutOfDomain(f"needs even k >= 10, n >= k, s >= 2, got n={n} k={k} s={s}")
    l = ell(k)
    i = (n - k + 3) % 2
    return 2 * C(l + 1, s) - C(3, s) + (n - k + 3) // 2 * (C(5, s) - C(3, s)) + i * (C(4, s) - C(3, s))


def bound_pair_max(n: int, k: int, a1: int, a2: int, s: int) -> int:
    return max(h_s(n, k, a1, s), h_s(n, k, a2, s))


def luo_bound(n: int, k: int, s: int) -> int:
    return bound_pair_max(n, k, 2, ell(k), s)


def eg_bound(k: int, n: int) -> Fraction:
    if n < 1 or k < 1:
        raise OutOfDomain("eg_bound needs positive n and k")
    return Fraction((k - 1) * (n - 1), 2)


def fan_bound(r: int, n: int) -> Fraction:
    if r < 4 or n < 2:
        raise OutOfDomain(f"fan_bound needs r >= 4, n >= 2, got r={r} n={n}")
    return Fraction((r - 3) * (n - 2), 2) + 2 * n - 3


def conjecture_split(n: int, r: int) -> tuple[int, int]:
    """(x, t) with n-2 = x(r-3) + t and 0 <= t <= r-4."""
    if r <= 3 or n < 2:
        raise OutOfDomain(f"needs r >= 4 and n >= 2, got r={r} n={n}")
    return divmod(n - 2, r - 3)


def conjecture_bound(n: int, r: int, s: int) -> int:
    if s < 2:
        raise OutOfDomain("s must be at least 2")
    x, t = conjecture_split(n, r)
    return x * C(r - 1, s) + C(t + 2, s)
