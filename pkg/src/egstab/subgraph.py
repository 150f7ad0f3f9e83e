"""Subgraph (not necessarily induced) containment by backtracking."""

from __future__ import annotations

from .graph import Graph, bits


def _neighbour_degrees(g: Graph) -> list[list[int]]:
    deg = g.degrees()
    return [sorted((deg[u] for u in bits(g.adj[v])), reverse=True) for v in range(g.n)]


def _compatible(host: Graph, pattern: Graph) -> list[int]:
    hd, pd = host.degrees(), pattern.degrees()
    hnd, pnd = _neighbour_degrees(host), _neighbour_degrees(pattern)
    out = []
    for p in range(pattern.n):
        m = 0
        for h in range(host.n):
            if hd[h] < pd[p]:
                continue
            if all(a >= b for a, b in zip(hnd[h], pnd[p])):
                m |= 1 << h
        out.append(m)
    return out


def _order(pattern: Graph) -> list[int]:
    """Pattern vertices so that each one has as many earlier neighbours as possible."""
    n = pattern.n
    deg = pattern.degrees()
    placed = 0
    order = []
    while len(order) < n:
        best, key = -1, None
        for v in range(n):
            if placed >> v & 1:
                continue
            k = ((pattern.adj[v] & placed).bit_count(), deg[v], -v)
            if key is None or k > key:
                best, key = v, k
        order.append(best)
        placed |= 1 << best
    return order


def contains_subgraph(host: Graph, pattern: Graph) -> dict[int, int] | None:
    """An injective map pattern -> host sending edges to edges, or None."""
    if pattern.n > host.n or pattern.num_edges() > host.num_edges():
        return None
    if pattern.n == 0:
        return {}
    compat = _compatible(host, pattern)
    if any(c == 0 for c in compat):
        return None
    order = _order(pattern)
    back = [[q for q in order[:i] if pattern.has_edge(q, order[i])] for i in range(len(order))]
    image = [-1] * pattern.n

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        cand = compat[p] & ~used
        for q in back[i]:
            cand &= host.adj[image[q]]
        while cand:
            low = cand & -cand
            h = low.bit_length() - 1
            cand ^= low
            image[p] = h
            if rec(i + 1, used | low):
                return True
        image[p] = -1
        return False

    if rec(0, 0):
        return {p: image[p] for p in range(pattern.n)}
    return None


def is_embedding(host: Graph, pattern: Graph, emb: dict[int, int]) -> bool:
    if len(set(emb.values())) != len(emb) or len(emb) != pattern.n:
        return False
    return all(host.has_edge(emb[u], emb[v]) for u, v in pattern.edges())
