"""Degree peeling, star forests and related structural tests."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import Graph, bits, components, mask_of


def disintegration(g: Graph, alpha: int, order: Sequence[int] | None = None) -> int:
    """Vertex set (bitset) left after repeatedly deleting vertices of degree <= alpha.

    ``order`` fixes the priority in which deletable vertices are removed; the
    result does not depend on it.
    """
    alive = g.full
    rank = list(order) if order is not None else list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in rank:
            if alive >> v & 1 and (g.adj[v] & alive).bit_count() <= alpha:
                alive &= ~(1 << v)
                changed = True
                if order is not None:
                    break
    return alive


def is_star(g: Graph, comp: int) -> bool:
    size = comp.bit_count()
    if size <= 2:
        return True
    edges = sum((g.adj[v] & comp).bit_count() for v in bits(comp)) // 2
    if edges != size - 1:
        return False
    return any((g.adj[v] & comp).bit_count() == size - 1 for v in bits(comp))


def is_star_forest(g: Graph, within: int | None = None) -> bool:
    """Every component (of the subgraph induced by ``within``) is a star."""
    return all(is_star(g, c) for c in components(g, within))


def star_forest_after_deletion(g: Graph, bound: int) -> int | None:
    """Smallest vertex set A (size <= bound) with g - A a star forest.

    Sets are tried by size, then lexicographically.  Returns the bitset or None.
    """
    for size in range(bound + 1):
        for sub in combinations(range(g.n), size):
            a = mask_of(sub)
            if is_star_forest(g, g.full & ~a):
                return a
    return None


def is_path_graph(g: Graph, within: int) -> bool:
    """The subgraph induced by ``within`` is a single path (a vertex counts)."""
    if within == 0:
        return False
    size = within.bit_count()
    degs = [(g.adj[v] & within).bit_count() for v in bits(within)]
    if size == 1:
        return True
    if max(degs) > 2 or sum(degs) != 2 * (size - 1):
        return False
    return len(components(g, within)) == 1


def path_order(g: Graph, within: int) -> list[int] | None:
    """Vertices of an induced path in order from its smaller end, or None."""
    if not is_path_graph(g, within):
        return None
    vs = list(bits(within))
    if len(vs) == 1:
        return vs
    ends = [v for v in vs if (g.adj[v] & within).bit_count() == 1]
    cur, prev = min(ends), -1
    out = [cur]
    while len(out) < len(vs):
        nxt = [u for u in bits(g.adj[cur] & within) if u != prev][0]
        prev, cur = cur, nxt
        out.append(cur)
    return out


def is_clique(g: Graph, s: int) -> bool:
    return all((g.adj[v] | (1 << v)) & s == s for v in bits(s))


def is_independent(g: Graph, s: int) -> bool:
    return all(not g.adj[v] & s for v in bits(s))
