"""Helpers shared by the suites."""

from __future__ import annotations

from ..enumeration import connected_graphs, two_connected_graphs
from ..errors import InvalidParameters
from ..graph import Graph


def load_graphs(n_min: int, n_max: int, two_connected: bool, deep: bool = False) -> list[Graph]:
    """All non-isomorphic (2-)connected graphs with n_min <= n <= n_max, by order."""
    out: list[Graph] = []
    for n in range(max(1, n_min), n_max + 1):
        if two_connected:
            if n < 3:
                continue
            out += two_connected_graphs(n, allow_large=deep)
        else:
            out += connected_graphs(n, allow_large=deep)
    return out


def upto(values, limit):
    return [v for v in values if v <= limit]


def nonempty(name: str, values) -> list[int]:
    vals = sorted(set(values))
    if not vals:
        raise InvalidParameters(f"empty grid for {name}")
    return vals
