"""Exact longest cycle and constrained longest path solvers.

All solvers are depth-first branch and bound over simple paths.  The bound
at a node is the current length plus the number of unvisited allowed
vertices reachable from the path end; a branch is also cut when no
acceptable end vertex is reachable any more.
"""

from __future__ import annotations

import sys
from typing import Sequence

from .errors import InvalidInput
from .graph import Graph, bits, mask_of, reachable

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


class _Longest:
    """Longest path from a fixed start whose last vertex lies in ``ends``."""

    def __init__(self, adj: Sequence[int], allowed: int, ends: int, min_len: int = 1,
                 stop_at: int | None = None, exact: int | None = None, first_below=None,
                 must: int = 0):
        self.adj = adj
        self.must = must  # vertices every recorded path has to contain
        self.allowed = allowed
        self.ends = ends
        self.min_len = min_len
        self.stop_at = stop_at
        self.exact = exact
        self.first_below = first_below  # optional predicate on (path) for symmetric pruning
        self.best: list[int] | None = None
        self.best_len = 0
        self.done = False

    def run(self, start: int, best_len: int = 0) -> None:
        self.best_len = best_len
        self._go([start], 1 << start)

    def _record(self, path: list[int]) -> None:
        if self.first_below is not None and not self.first_below(path):
            return
        if self.exact is not None:
            if len(path) == self.exact:
                self.best = list(path)
                self.best_len = len(path)
                self.done = True
            return
        if len(path) > self.best_len:
            self.best = list(path)
            self.best_len = len(path)
            if self.stop_at is not None and self.best_len >= self.stop_at:
                self.done = True

    def _go(self, path: list[int], visited: int) -> None:
        last = path[-1]
        if self.ends >> last & 1 and len(path) >= self.min_len and visited & self.must == self.must:
            self._record(path)
            if self.done:
                return
        free = self.allowed & ~visited
        reach = reachable(self.adj, last, free | (1 << last)) & ~(1 << last)
        if self.exact is not None:
            if len(path) + reach.bit_count() < self.exact or len(path) >= self.exact:
                return
        elif len(path) + reach.bit_count() <= self.best_len:
            return
        if not reach & self.ends or self.must & ~visited & ~reach:
            return
        nxt = self.adj[last] & free
        while nxt:
            low = nxt & -nxt
            v = low.bit_length() - 1
            nxt ^= low
            path.append(v)
            self._go(path, visited | low)
            path.pop()
            if self.done:
                return


def circumference(g: Graph, stop_at: int | None = None) -> tuple[int, list[int]] | None:
    """Exact length of a longest cycle with a witness, or None for forests.

    With ``stop_at`` the search returns as soon as a cycle of at least that
    length is found (the length is then a lower bound).
    """
    best_len = 0
    best: list[int] | None = None
    n = g.n
    for s in range(n):
        allowed = g.full & ~((1 << s) - 1)
        if allowed.bit_count() <= best_len:
            break
        # cycles whose smallest vertex is s; orient so that path[1] < path[-1]
        search = _Longest(g.adj, allowed, g.adj[s] & allowed, min_len=3,
                          stop_at=stop_at, first_below=lambda p: p[1] < p[-1])
        search.run(s, best_len)
        if search.best is not None and search.best_len > best_len:
            best_len, best = search.best_len, search.best
        if stop_at is not None and best_len >= stop_at:
            break
    if best is None:
        return None
    return best_len, best


def circ(g: Graph) -> int:
    r = circumference(g)
    return 0 if r is None else r[0]


def has_cycle_at_least(g: Graph, k: int) -> bool:
    r = circumference(g, stop_at=k)
    return r is not None and r[0] >= k


def longest_cycle_through_edge(g: Graph, a: int, b: int) -> tuple[int, list[int]] | None:
    if not g.has_edge(a, b):
        raise InvalidInput(f"({a}, {b}) is not an edge")
    h = g.remove_edge(a, b)
    search = _Longest(h.adj, h.full, 1 << b, min_len=3)
    search.run(a)
    if search.best is None:
        return None
    return search.best_len, search.best


def cycle_through_edge_of_length(g: Graph, a: int, b: int, length: int) -> list[int] | None:
    """A cycle with exactly ``length`` vertices using edge ab, or None."""
    if not g.has_edge(a, b):
        raise InvalidInput(f"({a}, {b}) is not an edge")
    if length < 3:
        return None
    h = g.remove_edge(a, b)
    search = _Longest(h.adj, h.full, 1 << b, min_len=3, exact=length)
    search.run(a)
    return search.best


def longest_path_between(g: Graph, a: int, b: int, avoid: int = 0) -> list[int] | None:
    """Longest a-b path (vertex sequence) avoiding the vertex set ``avoid``."""
    if a == b:
        return [a]
    search = _Longest(g.adj, g.full & ~avoid, 1 << b, min_len=2)
    search.run(a)
    return search.best


def longest_path_from(g: Graph, a: int, ends: int, stop_at: int | None = None) -> list[int] | None:
    """Longest path starting at a and ending in the vertex set ``ends`` (a itself excluded)."""
    search = _Longest(g.adj, g.full, ends & ~(1 << a), min_len=2, stop_at=stop_at)
    search.run(a)
    return search.best


def longest_path_through_edge(g: Graph, s: int, t: int, a: int, b: int) -> list[int] | None:
    """Longest s-t path that uses the edge ab, or None.

    The edge is subdivided by a new vertex w and the search only accepts
    paths through w.
    """
    if not g.has_edge(a, b):
        raise InvalidInput(f"({a}, {b}) is not an edge")
    if s == t:
        return None
    h = g.remove_edge(a, b).add_vertex((1 << a) | (1 << b))
    w = g.n
    search = _Longest(h.adj, h.full, 1 << t, min_len=2, must=1 << w)
    search.run(s)
    if search.best is None:
        return None
    return [v for v in search.best if v != w]


def longest_s_path(g: Graph, s: int | Sequence[int]) -> tuple[int, list[int]] | None:
    """Longest path (counted in vertices) with both end-vertices in ``s``.

    A single vertex of ``s`` counts as a path on one vertex.
    """
    smask = s if isinstance(s, int) else mask_of(s)
    smask &= g.full
    if not smask:
        return None
    best_len = 0
    best = None
    for v in bits(smask):
        search = _Longest(g.adj, g.full, smask, min_len=1, stop_at=g.n,
                          first_below=lambda p: p[0] <= p[-1])
        search.run(v, best_len)
        if search.best is not None and search.best_len > best_len:
            best_len, best = search.best_len, search.best
        if best_len == g.n:
            break
    return best_len, best


def hamilton_path(g: Graph, a_set: int, b_set: int) -> list[int] | None:
    """A Hamilton path starting in ``a_set`` and ending in ``b_set``, if any."""
    if g.n == 0:
        return None
    for a in bits(a_set):
        search = _Longest(g.adj, g.full, b_set & ~(1 << a) if g.n > 1 else b_set,
                          min_len=g.n, exact=g.n)
        search.run(a)
        if search.best is not None:
            return search.best
    return None


def naive_circumference(g: Graph) -> int:
    """Plain exhaustive cycle enumeration, kept as an independent oracle."""
    best = 0

    def extend(path, visited):
        nonlocal best
        last = path[-1]
        if len(path) >= 3 and g.has_edge(last, path[0]):
            best = max(best, len(path))
        for v in bits(g.adj[last] & ~visited):
            if v > path[0]:
                extend(path + [v], visited | (1 << v))

    for s in range(g.n):
        extend([s], 1 << s)
    return best
