"""Crossing pairs on a path and the constructive long-cycle lemma for 2-connected graphs.

Positions on a path ``P = x_1 ... x_m`` are 1-based throughout this module,
so ``path[h - 1]`` is ``x_h``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cycles import circumference, longest_cycle_through_edge
from .errors import InvalidInput
from .graph import Graph, bits, is_path, is_two_connected, mask_of


@dataclass(frozen=True)
class CrossingPair:
    i: int
    j: int
    minimal: bool

    @property
    def length(self) -> int:
        return self.j - self.i - 1


@dataclass(frozen=True)
class CrossingInfo:
    pairs: list[CrossingPair]
    s_P: int | None  # min{h : x_{h+1} adjacent to x_m}
    t_P: int | None  # max{h : x_{h-1} adjacent to x_1}


def end_neighbour_positions(g: Graph, path: Sequence[int]) -> tuple[list[int], list[int]]:
    """Positions h with x_h adjacent to x_1, and positions with x_h adjacent to x_m."""
    m = len(path)
    first, last = path[0], path[-1]
    s1 = [h for h in range(2, m + 1) if g.has_edge(first, path[h - 1])]
    sm = [h for h in range(1, m) if g.has_edge(last, path[h - 1])]
    return s1, sm


def crossing_pairs(g: Graph, path: Sequence[int]) -> CrossingInfo:
    if not is_path(g, path):
        raise InvalidInput("not a path of the graph")
    s1, sm = end_neighbour_positions(g, path)
    marks = sorted(set(s1) | set(sm))
    pairs = []
    for i in sm:
        for j in s1:
            if i < j:
                minimal = not any(i < h < j for h in marks)
                pairs.append(CrossingPair(i, j, minimal))
    pairs.sort(key=lambda p: (p.i, p.j))
    s_p = min(sm) - 1 if sm and min(sm) >= 2 else None
    t_p = max(s1) + 1 if s1 and max(s1) + 1 <= len(path) else None
    return CrossingInfo(pairs, s_p, t_p)


@dataclass(frozen=True)
class PosaResult:
    cycle: list[int]
    method: str  # closing-edge | rotation | crossing | bridge | search | edge
    target: int
    d1: int
    dm: int
    i: int | None
    j: int | None

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def meets_bound(self) -> bool:
        return self.length >= self.target


def posa_target(g: Graph, path: Sequence[int]) -> int:
    """min{m, d_P(x_1) + d_P(x_m) + bonus} with bonus 1 if j = i and 2 if j < i."""
    s1, sm = end_neighbour_positions(g, path)
    m = len(path)
    bonus = 0
    if s1 and sm:
        i, j = min(sm), max(s1)
        if j == i:
            bonus = 1
        elif j < i:
            bonus = 2
    return min(m, len(s1) + len(sm) + bonus)


def _bridges(g: Graph, path: Sequence[int], left: range, right: range) -> tuple[int, int, list[int]] | None:
    """Shortest path Q from some x_u (u in left) to some x_v (v in right) with interior off P.

    Ties are broken by the smallest (u, v).  Returns (u, v, interior vertices).
    """
    on_path = mask_of(path)
    pos = {v: h for h, v in enumerate(path, start=1)}
    right_set = set(right)
    best = None
    for u in left:
        src = path[u - 1]
        # BFS through off-path vertices
        prev = {src: None}
        dq = deque([src])
        found: dict[int, list[int]] = {}
        while dq:
            x = dq.popleft()
            for y in range(g.n):
                if not g.has_edge(x, y):
                    continue
                if on_path >> y & 1:
                    h = pos[y]
                    if h in right_set and h not in found:
                        inner = []
                        z = x
                        while z != src:
                            inner.append(z)
                            z = prev[z]
                        found[h] = inner[::-1]
                    continue
                if y not in prev:
                    prev[y] = x
                    dq.append(y)
        for v, inner in found.items():
            cand = (len(inner), u, v, inner)
            if best is None or cand[:3] < best[:3]:
                best = cand
    if best is None:
        return None
    return best[1], best[2], best[3]


def _bridge_cycle(path, s1, sm, u, v, inner) -> list[int]:
    p = min(h for h in s1 if h > u)
    q = max(h for h in sm if h < v)
    x = lambda h: path[h - 1]
    cyc = [x(h) for h in range(1, u + 1)] + inner + [x(h) for h in range(v, len(path) + 1)]
    cyc += [x(h) for h in range(q, p - 1, -1)]
    return cyc


def posa_cycle(g: Graph, path: Sequence[int]) -> PosaResult:
    """A cycle of length at least ``posa_target(g, path)``."""
    path = list(path)
    m = len(path)
    if m < 2 or not is_path(g, path):
        raise InvalidInput("need a path with at least two vertices")
    if not is_two_connected(g):
        raise InvalidInput("graph is not 2-connected")
    s1, sm = end_neighbour_positions(g, path)
    d1, dm = len(s1), len(sm)
    target = posa_target(g, path)
    x = lambda h: path[h - 1]
    i = min(sm) if sm else None
    j = max(s1) if s1 else None

    def result(cycle, method):
        return PosaResult(cycle, method, target, d1, dm, i, j)

    if m == 2:
        _, cyc = longest_cycle_through_edge(g, path[0], path[1])
        return result(cyc, "edge")
    if 1 in sm:
        return result(path, "closing-edge")
    sm_set = set(sm)
    for h in s1:
        if h - 1 in sm_set:
            cyc = [x(t) for t in range(1, h)] + [x(t) for t in range(m, h - 1, -1)]
            return result(cyc, "rotation")
    info = crossing_pairs(g, path)
    minimal = [p for p in info.pairs if p.minimal]
    if minimal:
        cp = minimal[0]
        cyc = [x(t) for t in range(1, cp.i + 1)] + [x(t) for t in range(m, cp.j - 1, -1)]
        return result(cyc, "crossing")
    if i is not None and j is not None:
        # no crossing pair: j <= i; jump over x_j .. x_i with a bridge
        br = _bridges(g, path, range(1, j), range(i + 1, m + 1))
        if br is not None:
            u, v, inner = br
            cyc = _bridge_cycle(path, s1, sm, u, v, inner)
            if len(cyc) >= target:
                return result(cyc, "bridge")
    found = circumference(g, stop_at=target)
    if found is None:
        raise InvalidInput("graph has no cycle")
    return result(found[1], "search")


def greedy_maximal_paths(g: Graph) -> Iterator[list[int]]:
    """One maximal path per ordered edge (s, t).

    Start from [s, t], extend the tail by the smallest unvisited neighbour
    until stuck, then extend the head the same way.  Neither end has a
    neighbour off the path afterwards.
    """
    for s in range(g.n):
        for t in bits(g.adj[s]):
            path = [s, t]
            seen = (1 << s) | (1 << t)
            while nb := g.adj[path[-1]] & ~seen:
                v = (nb & -nb).bit_length() - 1
                path.append(v)
                seen |= 1 << v
            head = []
            while nb := g.adj[head[-1] if head else path[0]] & ~seen:
                v = (nb & -nb).bit_length() - 1
                head.append(v)
                seen |= 1 << v
            yield head[::-1] + path
