"""Exhaustive non-isomorphic enumeration of connected and 2-connected graphs.

Connected graphs on n vertices are grown from those on n-1 vertices by adding
one vertex with every nonempty neighbourhood (canonical construction path).
A child is kept only when the new vertex lies in the automorphism orbit of
the designated vertex: the non-cut vertex of smallest (degree, sorted
neighbour degrees) key, ties broken by canonical position.  Deleting a
non-cut vertex keeps the graph connected, so every class has exactly one
accepted parent class; children of one parent are deduplicated by canonical
form.  2-connected graphs are obtained by filtering.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Iterator

from .canon import canonical_labelling
from .errors import CapacityExceeded, InvalidInput
from .graph import Graph, bits, is_two_connected, reachable
from .graph6 import decode, encode

SOFT_CAP = 10

# number of classes, used to validate cache files and in tests
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080, 10: 11716571}
TWO_CONNECTED_COUNTS = {3: 1, 4: 3, 5: 10, 6: 56, 7: 468, 8: 7123, 9: 194066, 10: 9743542}


def _key(adj: list[int], deg: list[int], v: int) -> tuple:
    return (deg[v], tuple(sorted(deg[u] for u in bits(adj[v]))))


def _accept(child: Graph) -> tuple[bool, bytes | None]:
    """Decide whether the last vertex is the designated deletion vertex."""
    n = child.n
    v = n - 1
    adj = child.adj
    full = child.full
    deg = [a.bit_count() for a in adj]
    dv = deg[v]

    def non_cut(u: int) -> bool:
        rest = full & ~(1 << u)
        start = (rest & -rest).bit_length() - 1
        return reachable(adj, start, rest) == rest

    # v itself is never a cut vertex since child - v is the connected parent
    if any(deg[u] < dv and non_cut(u) for u in range(v)):
        return False, None
    kv = _key(adj, deg, v)
    tied = 1 << v
    for u in range(v):
        if deg[u] != dv:
            continue
        ku = _key(adj, deg, u)
        if ku > kv or not non_cut(u):
            continue
        if ku < kv:
            return False, None
        tied |= 1 << u
    lab = canonical_labelling(child)
    form = encode(child.relabel(lab.perm)).encode("ascii")
    if tied == 1 << v:
        return True, form
    # designated vertex: the tied vertex with the smallest canonical position
    pos = [0] * n
    for i, u in enumerate(lab.perm):
        pos[u] = i
    d = min(bits(tied), key=lambda u: pos[u])
    orbit = lab.orbits()
    return orbit[d] == orbit[v], form


def children(parent: Graph) -> list[Graph]:
    """Canonical children of ``parent``, sorted by canonical form."""
    out: dict[bytes, Graph] = {}
    for s in range(1, 1 << parent.n):
        child = parent.add_vertex(s)
        ok, form = _accept(child)
        if ok and form not in out:
            out[form] = decode(form.decode("ascii"))
    return [out[f] for f in sorted(out)]


def _check_n(n: int, allow_large: bool) -> None:
    if n < 1:
        raise InvalidInput("n must be positive")
    if n > SOFT_CAP and not allow_large:
        raise CapacityExceeded(f"n={n} above soft cap {SOFT_CAP}; pass allow_large=True")


def cache_dir() -> Path | None:
    d = os.environ.get("EGSTAB_CACHE_DIR")
    if d == "":
        return None
    if d is None:
        return Path.home() / ".cache" / "egstab"
    return Path(d)


def _cache_path(n: int, kind: str) -> Path | None:
    d = cache_dir()
    return None if d is None else d / f"{kind}-{n}.g6"


def _read_cache(n: int, kind: str, expected: int | None) -> list[Graph] | None:
    path = _cache_path(n, kind)
    if path is None or not path.exists():
        return None
    try:
        with open(path) as fh:
            header = fh.readline().strip()
            if header != f"#egstab-enum n={n} {kind}":
                return None
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError:
        return None
    if expected is not None and len(lines) != expected:
        return None
    return [decode(ln) for ln in lines]


def _write_cache(n: int, kind: str, graphs: list[Graph]) -> None:
    path = _cache_path(n, kind)
    if path is None:
        return
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(f"#egstab-enum n={n} {kind}\n")
            for g in graphs:
                fh.write(encode(g) + "\n")
        os.replace(tmp, path)
    except OSError:
        pass


_memo: dict[tuple[int, str], list[Graph]] = {}


def connected_graphs(n: int, allow_large: bool = False) -> list[Graph]:
    """One representative per isomorphism class of connected n-vertex graphs."""
    _check_n(n, allow_large)
    key = (n, "connected")
    if key in _memo:
        return _memo[key]
    graphs = _read_cache(n, "connected", CONNECTED_COUNTS.get(n))
    if graphs is None:
        if n == 1:
            graphs = [Graph(1, (0,))]
        else:
            graphs = []
            for parent in connected_graphs(n - 1, allow_large):
                graphs.extend(children(parent))
            graphs.sort(key=encode)
        if n >= 7:
            _write_cache(n, "connected", graphs)
    _memo[key] = graphs
    return graphs


def two_connected_graphs(n: int, allow_large: bool = False) -> list[Graph]:
    _check_n(n, allow_large)
    if n < 3:
        return []
    key = (n, "twoconnected")
    if key in _memo:
        return _memo[key]
    graphs = _read_cache(n, "twoconnected", TWO_CONNECTED_COUNTS.get(n))
    if graphs is None:
        graphs = [g for g in connected_graphs(n, allow_large) if is_two_connected(g)]
        if n >= 7:
            _write_cache(n, "twoconnected", graphs)
    _memo[key] = graphs
    return graphs


def enumerate_two_connected(n: int, allow_large: bool = False) -> Iterator[Graph]:
    yield from two_connected_graphs(n, allow_large)


def enumerate_connected(n: int, allow_large: bool = False) -> Iterator[Graph]:
    yield from connected_graphs(n, allow_large)
