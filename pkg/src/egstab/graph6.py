"""graph6 encoding (McKay's format, standard variant only)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import CapacityExceeded, ParseError
from .graph import MAX_N, Graph


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def encode(g: Graph) -> str:
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    line = text.rstrip("\n")
    if line.startswith(">>graph6<<"):
        line = line[10:]
    if not line:
        raise ParseError("empty graph6 record")
    if any(not (63 <= ord(ch) <= 126) for ch in line):
        raise ParseError("graph6 record contains bytes outside 63..126")
    if line[0] == "~":
        if len(line) < 4 or line[1] == "~":
            raise ParseError("unsupported or truncated graph6 size header")
        n = 0
        for ch in line[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = line[4:]
    else:
        n = ord(line[0]) - 63
        body = line[1:]
    if n > MAX_N:
        raise CapacityExceeded(f"graph6 record has n={n} > {MAX_N}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 payload has {len(body)} bytes, expected {need}")
    adj = [0] * n
    k = 0
    values = [ord(ch) - 63 for ch in body]
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    total = n * (n - 1) // 2
    if total % 6 and values and values[-1] & ((1 << (6 - total % 6)) - 1):
        raise ParseError("nonzero padding bits in graph6 record")
    return Graph(n, tuple(adj))


def read_file(path: str | Path) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            yield decode(line)


def write_lines(graphs: Iterable[Graph]) -> str:
    return "".join(encode(g) + "\n" for g in graphs)
