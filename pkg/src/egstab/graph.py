"""Immutable simple graphs on at most 64 vertices, stored as neighbour bitsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityExceeded, InvalidInput

MAX_N = 64


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n > MAX_N:
            raise CapacityExceeded(f"n={self.n} exceeds {MAX_N}")
        if len(self.adj) != self.n:
            raise InvalidInput("adjacency length does not match n")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.full & ~self.adj[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(rest))
        return out

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise InvalidInput("loop edge")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def add_vertex(self, neighbours: int = 0) -> Graph:
        """Append vertex ``n`` adjacent to the bitset ``neighbours``."""
        v = self.n
        adj = [a | ((neighbours >> u & 1) << v) for u, a in enumerate(self.adj)]
        adj.append(neighbours)
        return Graph(self.n + 1, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """New graph in which vertex ``i`` is old vertex ``perm[i]``."""
        pos = [0] * self.n
        for i, old in enumerate(perm):
            pos[old] = i
        adj = []
        for old in perm:
            row = 0
            for u in bits(self.adj[old]):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n > MAX_N:
        raise CapacityExceeded(f"n={n} exceeds {MAX_N}")
    if n < 0:
        raise InvalidInput("negative vertex count")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise InvalidInput(f"loop edge at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput(f"endpoint of ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = list(g.adj) + [a << shift for a in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def join_vertex(g: Graph) -> Graph:
    """Cone over ``g``: a new vertex adjacent to every vertex."""
    return g.add_vertex(g.full)


def reachable(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitset of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    left = g.full if within is None else within
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = reachable(g.adj, v, left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return reachable(g.adj, 0, g.full) == g.full


def cut_vertices(g: Graph) -> int:
    """Bitset of articulation points (iterative Hopcroft-Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = 0
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        children = 0
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        children += 1
                    stack.append((w, v, iter(bits(g.adj[w]))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= disc[p]:
                    cuts |= 1 << p
        if children > 1:
            cuts |= 1 << root
    return cuts


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and cut_vertices(g) == 0


def induced_subgraph(g: Graph, s: int | Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s`` relabelled to 0..|s|-1; returns it with the index map.

    ``index_map[i]`` is the vertex of ``g`` that became vertex ``i``.
    """
    mask = s if isinstance(s, int) else mask_of(s)
    if mask == 0:
        raise InvalidInput("empty vertex set")
    if mask >> g.n:
        raise InvalidInput("vertex set not contained in the graph")
    index_map = list(bits(mask))
    pos = {v: i for i, v in enumerate(index_map)}
    adj = []
    for v in index_map:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(index_map), tuple(adj)), index_map


def delete_vertices(g: Graph, s: int) -> tuple[Graph, list[int]]:
    keep = g.full & ~s
    if keep == 0:
        return Graph(0, ()), []
    return induced_subgraph(g, keep)


def is_path(g: Graph, vertices: Sequence[int]) -> bool:
    if len(set(vertices)) != len(vertices) or not vertices:
        return False
    if any(not (0 <= v < g.n) for v in vertices):
        return False
    return all(g.has_edge(a, b) for a, b in zip(vertices, vertices[1:]))


def is_cycle(g: Graph, vertices: Sequence[int]) -> bool:
    return len(vertices) >= 3 and is_path(g, vertices) and g.has_edge(vertices[-1], vertices[0])
