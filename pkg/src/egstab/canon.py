"""Canonical labelling by individualisation-refinement with automorphism pruning.

The search tree is the usual one: refine to an equitable ordered partition,
individualise each vertex of the first non-singleton cell, recurse.  The
canonical labelling is the leaf whose relabelled adjacency (upper triangle in
graph6 column order) is lexicographically smallest.  Automorphisms discovered
at equivalent leaves prune the tree by orbits and by jumping back to the
point where the current path left the first or best path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits
from .graph6 import encode


def _refine(adj: Sequence[int], cells: list[int], queue: list[int], n: int) -> list[int]:
    head = 0
    while head < len(queue) and len(cells) < n:
        w = queue[head]
        head += 1
        out = []
        for x in cells:
            if x & (x - 1) == 0:
                out.append(x)
                continue
            groups: dict[int, int] = {}
            for v in bits(x):
                c = (adj[v] & w).bit_count()
                groups[c] = groups.get(c, 0) | (1 << v)
            if len(groups) == 1:
                out.append(x)
                continue
            for c in sorted(groups):
                out.append(groups[c])
                queue.append(groups[c])
        cells = out
    return cells


def _certificate(adj: Sequence[int], perm: Sequence[int]) -> int:
    n = len(perm)
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = [0] * n
    for i, v in enumerate(perm):
        r = 0
        for u in bits(adj[v]):
            r |= 1 << pos[u]
        rows[i] = r
    cert = 0
    for j in range(1, n):
        r = rows[j]
        # bits i=0..j-1 in increasing i order, most significant first
        for i in range(j):
            cert = (cert << 1) | (r >> i & 1)
    return cert


def _twin_generators(adj: Sequence[int], n: int) -> list[tuple[int, ...]]:
    gens = []
    seen_open: dict[int, int] = {}
    seen_closed: dict[int, int] = {}
    for v in range(n):
        for key, table in ((adj[v], seen_open), (adj[v] | (1 << v), seen_closed)):
            if key in table:
                u = table[key]
                p = list(range(n))
                p[u], p[v] = v, u
                gens.append(tuple(p))
            else:
                table[key] = v
    return gens


def _orbit_roots(gens: list[tuple[int, ...]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


@dataclass
class Labelling:
    perm: list[int]  # canonical position i holds original vertex perm[i]
    generators: list[tuple[int, ...]]

    def orbits(self) -> list[int]:
        """Orbit representative (smallest vertex) for each vertex."""
        return _orbit_roots(self.generators, len(self.perm))


class _Search:
    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.gens: list[tuple[int, ...]] = _twin_generators(adj, n)
        self.first_path: list[int] | None = None
        self.first_perm: list[int] | None = None
        self.first_cert = -1
        self.best_path: list[int] | None = None
        self.best_perm: list[int] | None = None
        self.best_cert = -1

    def _leaf(self, cells: list[int], path: list[int]) -> int:
        perm = [c.bit_length() - 1 for c in cells]
        cert = _certificate(self.adj, perm)
        depth = len(path)
        if self.first_perm is None:
            self.first_path, self.first_perm, self.first_cert = list(path), perm, cert
            self.best_path, self.best_perm, self.best_cert = list(path), perm, cert
            return depth - 1
        for ref_path, ref_perm, ref_cert in (
            (self.first_path, self.first_perm, self.first_cert),
            (self.best_path, self.best_perm, self.best_cert),
        ):
            if cert == ref_cert:
                gamma = [0] * self.n
                for a, b in zip(ref_perm, perm):
                    gamma[a] = b
                self.gens.append(tuple(gamma))
                d = 0
                while d < len(path) and d < len(ref_path) and path[d] == ref_path[d]:
                    d += 1
                return d
        if cert < self.best_cert:
            self.best_path, self.best_perm, self.best_cert = list(path), perm, cert
        return depth - 1

    def run(self, cells: list[int], path: list[int]) -> int:
        level = len(path)
        if len(cells) == self.n:
            return self._leaf(cells, path)
        t = 0
        while cells[t] & (cells[t] - 1) == 0:
            t += 1
        target = cells[t]
        tried: list[int] = []
        for v in bits(target):
            if tried:
                stab = [g for g in self.gens if all(g[p] == p for p in path)]
                if stab:
                    roots = _orbit_roots(stab, self.n)
                    if any(roots[v] == roots[u] for u in tried):
                        continue
            tried.append(v)
            child = cells[:t] + [1 << v, target & ~(1 << v)] + cells[t + 1:]
            child = _refine(self.adj, child, [1 << v], self.n)
            r = self.run(child, path + [v])
            if r < level:
                return r
        return level - 1


def canonical_labelling(g: Graph, colouring: Sequence[int] | None = None) -> Labelling:
    """Canonical labelling of ``g``.

    ``colouring`` optionally gives an ordered list of vertex-set bitsets that
    the labelling must respect (vertices keep their colour class order).
    """
    n = g.n
    if n == 0:
        return Labelling([], [])
    if colouring is None:
        cells = [g.full]
        queue = [g.full]
    else:
        cells = [c for c in colouring if c]
        queue = list(cells)
    cells = _refine(g.adj, cells, queue, n)
    search = _Search(g.adj, n)
    if colouring is not None:
        # twin swaps are only automorphisms when they stay inside a colour class
        search.gens = [p for p in search.gens
                       if all(_same_cell(colouring, v, p[v]) for v in range(n))]
    search.run(cells, [])
    return Labelling(search.best_perm, search.gens)


def _same_cell(cells: Sequence[int], u: int, v: int) -> bool:
    for c in cells:
        if c >> u & 1:
            return bool(c >> v & 1)
    return False


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labelling(g).perm)


def canonical_form(g: Graph) -> bytes:
    """Label-invariant byte string; equal strings iff the graphs are isomorphic."""
    return encode(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_orbits(g: Graph) -> list[int]:
    return canonical_labelling(g).orbits()
