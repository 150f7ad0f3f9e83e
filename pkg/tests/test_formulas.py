from fractions import Fraction
from math import comb

import pytest
from hypothesis import assume, given, strategies as st

from egstab.cliques import brute_force_cliques, count_cliques
from egstab.errors import OutOfDomain
from egstab.families import build_gnk3, build_h
from egstab.formulas import (C, bound_pair_max, conjecture_bound, conjecture_split, eg_bound, ell,
                             f_s, fan_bound, g_s, g_s_construction, h_s, luo_bound)


@pytest.mark.parametrize("k,l", [(9, 4), (10, 4), (5, 2), (6, 2), (7, 3)])
def test_ell(k, l):
    assert ell(k) == l


def test_ell_domain():
    with pytest.raises(OutOfDomain):
        ell(4)


def test_binomial_total():
    assert C(3, -1) == 0 and C(3, 4) == 0 and C(-1, 0) == 0 and C(5, 2) == 10


def test_h_s_three_n_minus_three():
    for n in range(9, 31):
        assert h_s(n, 9, 3, 2) == 3 * n - 3
    assert h_s(15, 9, 3, 2) == 42


def test_h_2_at_k10_a3_is_three_n():
    # the k = 10 analogue of the line above is 3n, not 3n - 3
    for n in range(10, 31):
        assert h_s(n, 10, 3, 2) == 3 * n


def test_h_s_three_cliques():
    assert h_s(12, 9, 3, 3) == 38
    assert brute_force_cliques(build_h(12, 9, 3), 3) == 38


@pytest.mark.parametrize("k", range(5, 13))
def test_h_s_vanishes_above_clique_size(k):
    for a in range(1, k // 2 + 1):
        s = max(k - a, a + 1) + 1
        assert h_s(k, k, a, s) == 0


def test_h_s_domain():
    for bad in [(8, 9, 3, 2), (9, 9, 5, 2), (9, 9, 0, 2), (9, 9, 3, 1)]:
        with pytest.raises(OutOfDomain):
            h_s(*bad)


def test_f_s_examples():
    assert f_s(12, 9, 2, 2) == 32
    assert h_s(12, 9, 3, 2) == 33
    assert f_s(12, 9, 2, 2) <= h_s(12, 9, 3, 2) <= h_s(12, 9, 4, 2)


@pytest.mark.parametrize("k", range(9, 15))
def test_f_s_tail_vanishes(k):
    l = ell(k)
    for r in range(1, l - 1):
        for s in range(2, l + 3):
            if s - 1 > l - r + 1:
                assert f_s(k, k, r, s) == C(k - l, s) + C(l + 1, s) - C(l - r + 1, s)


def test_g_s_examples():
    # n - k + 3 = 6 is even: no parity term; direct count of the construction agrees
    assert g_s(13, 10, 2) == 38
    assert count_cliques(build_gnk3(13, 10), 2) == 38
    # n - k + 3 = 7 is odd: the displayed count adds C(4, s)
    assert g_s(14, 10, 2) == 44
    assert g_s_construction(14, 10, 2) == count_cliques(build_gnk3(14, 10), 2) == 41


def test_g_s_below_h_s_sweep():
    for n in range(10, 31):
        for s in (2, 3):
            assert g_s(n, 10, s) <= h_s(n, 10, 4, s)


def test_bound_pair_max_examples():
    assert h_s(20, 9, 3, 2) == 57
    assert h_s(20, 9, 2, 2) == 47
    assert bound_pair_max(20, 9, 3, 2, 2) == 57
    assert bound_pair_max(15, 9, 3, 3, 2) == h_s(15, 9, 3, 2)
    k, l = 11, ell(11)
    assert bound_pair_max(k, k, l - 1, 2, 3) == max(h_s(k, k, l - 1, 3), h_s(k, k, 2, 3))


def test_edge_bounds():
    assert fan_bound(6, 10) == 29
    assert eg_bound(5, 11) == 20
    assert eg_bound(4, 4) == Fraction(9, 2)
    assert conjecture_split(10, 6) == (2, 2)
    assert conjecture_bound(10, 6, 2) == 26


def test_luo_bound_is_kopylov_at_s2():
    # Kopylov: max{h(n,k,2), h(n,k,l)} edges with h(n,k,a) = C(k-a,2) + (n-k+a)a
    for k in range(5, 13):
        for n in range(k, k + 10):
            l = ell(k)
            kop = max(comb(k - a, 2) + (n - k + a) * a for a in (2, l))
            assert luo_bound(n, k, 2) == kop


@st.composite
def h_params(draw):
    k = draw(st.integers(5, 20))
    a = draw(st.integers(1, k // 2))
    n = draw(st.integers(k, 64))
    s = draw(st.integers(2, 10))
    return n, k, a, s


@given(h_params())
def test_h_s_two_specialization_and_sign(p):
    n, k, a, s = p
    assert h_s(n, k, a, 2) == comb(k - a, 2) + (n - k + a) * a
    v = h_s(n, k, a, s)
    assert isinstance(v, int) and v >= 0


@given(st.integers(9, 20), st.data())
def test_f_s_nonnegative_integer(k, data):
    l = ell(k)
    assume(l >= 3)
    r = data.draw(st.integers(1, l - 2))
    n = data.draw(st.integers(k, 64))
    s = data.draw(st.integers(2, 10))
    v = f_s(n, k, r, s)
    assert isinstance(v, int) and v >= 0


@given(st.integers(9, 14), st.data())
def test_lemma_claim_f_below_h(k, data):
    l = ell(k)
    r = data.draw(st.integers(1, l - 2))
    n = data.draw(st.integers(k, k + 20))
    s = data.draw(st.integers(2, l))
    t = data.draw(st.integers(l - r + 1, l))
    assert f_s(n, k, r, s) <= h_s(n, k, t, s)


def test_h_s_equals_clique_count_small_grid():
    # the full n <= 30 grid runs in the acceptance suite
    for k in range(5, 13):
        for a in range(1, k // 2 + 1):
            for n in (k, k + 3):
                g = build_h(n, k, a)
                for s in range(2, 6):
                    assert count_cliques(g, s) == h_s(n, k, a, s)
