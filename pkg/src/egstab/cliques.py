"""Clique counting by pivoting (every clique counted once, all sizes at once)."""

from __future__ import annotations

from itertools import combinations
from math import comb

from .graph import Graph, bits


def clique_counts(g: Graph) -> list[int]:
    """``out[s]`` is the number of s-vertex cliques, for s = 0..omega."""
    n = g.n
    adj = g.adj
    counts = [0] * (n + 2)

    def rec(p: int, hold: int, piv: int) -> None:
        if not p:
            for j in range(piv + 1):
                counts[hold + j] += comb(piv, j)
            return
        best_u, best_d = -1, -1
        for u in bits(p):
            d = (adj[u] & p).bit_count()
            if d > best_d:
                best_u, best_d = u, d
        branch = p & ~adj[best_u]
        for v in bits(branch):
            if v == best_u:
                rec(p & adj[v], hold, piv + 1)
            else:
                rec(p & adj[v], hold + 1, piv)
            p &= ~(1 << v)

    rec(g.full, 0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def count_cliques(g: Graph, s: int) -> int:
    if s < 0:
        return 0
    c = clique_counts(g)
    return c[s] if s < len(c) else 0


def clique_number(g: Graph) -> int:
    return len(clique_counts(g)) - 1


def brute_force_cliques(g: Graph, s: int) -> int:
    """Check every s-subset; independent oracle for ``count_cliques``."""
    total = 0
    for sub in combinations(range(g.n), s):
        if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
            total += 1
    return total
