"""Constructors and enumerators for the extremal and forbidden graph families.

Members of F(m, k, r) are described by vertex classes A, B, C, D and by the
layout of the paths that make up F[C u D].  Layouts are strings over the
symbols C and D, one string per path component, read along the path.
Vertices are numbered A, then B, then C and D in order of first appearance
in the layout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import NamedTuple

from .canon import canonical_form
from .cycles import circumference, hamilton_path
from .errors import InvalidParameters, OutOfDomain
from .formulas import ell
from .graph import Graph, bits, components, from_edges, mask_of
from .subgraph import contains_subgraph
from .structure import is_clique, is_independent, is_path_graph, path_order

TYPES = ("I", "II", "III", "IV")
SPECIAL_TAGS = ("F0", "F1", "F2", "F3", "F4", "F5")


# ---------------------------------------------------------------------------
# simple constructions

def h_parts(n: int, k: int, a: int) -> tuple[int, int, int]:
    """Bitsets (A, B, C) of H(n, k, a) in constructor order."""
    if not (n >= k >= 2 * a >= 2):
        raise OutOfDomain(f"H(n,k,a) needs n >= k >= 2a >= 2, got {n},{k},{a}")
    nb = n - k + a
    A = mask_of(range(a))
    B = mask_of(range(a, a + nb))
    C = mask_of(range(a + nb, n))
    return A, B, C


def build_h(n: int, k: int, a: int) -> Graph:
    """A u C is a clique on k - a vertices, B is independent and complete to A."""
    A, B, C = h_parts(n, k, a)
    ac = list(bits(A | C))
    edges = list(combinations(ac, 2))
    edges += [(u, v) for u in bits(A) for v in bits(B)]
    return from_edges(n, edges)


def build_z(n: int, k: int, delta: int) -> Graph:
    """K_{k-delta} and t copies of K_{delta+1}, all sharing the vertex pair {0, 1}."""
    if delta < 2:
        raise InvalidParameters("delta must be at least 2")
    if k - delta < delta + 1:
        raise InvalidParameters(f"need k - delta >= delta + 1, got k={k} delta={delta}")
    extra = n - k + delta
    if extra < 0 or extra % (delta - 1):
        raise InvalidParameters(f"(n - k + delta) = {extra} is not a nonnegative multiple of {delta - 1}")
    t = extra // (delta - 1)
    big = list(range(k - delta))
    edges = list(combinations(big, 2))
    nxt = k - delta
    for _ in range(t):
        block = [0, 1] + list(range(nxt, nxt + delta - 1))
        edges += list(combinations(block, 2))
        nxt += delta - 1
    return from_edges(nxt, edges)


def build_f_ell(l: int) -> Graph:
    """Path on 2l-1 vertices plus three independent vertices joined to its l even positions."""
    if l < 2:
        raise OutOfDomain("l must be at least 2")
    p = 2 * l - 1
    edges = [(i, i + 1) for i in range(p - 1)]
    for x in range(p, p + 3):
        edges += [(x, i) for i in range(0, p, 2)]
    return from_edges(p + 3, edges)


def build_e(m: int) -> Graph:
    if m < 0:
        raise OutOfDomain("m must be nonnegative")
    return from_edges(m, [(2 * i, 2 * i + 1) for i in range(m // 2)])


def gnk3_parts(n: int, k: int) -> dict[str, int]:
    if k % 2 or k < 10 or n < k + 1:
        raise OutOfDomain(f"G(n,k,3) needs even k >= 10 and n >= k+1, got n={n} k={k}")
    l = ell(k)
    A = mask_of(range(l - 2))
    B = mask_of(range(l - 2, 2 * l - 4))
    C = mask_of(range(2 * l - 4, 2 * l - 1))
    D = mask_of(range(2 * l - 1, 2 * l + 3))
    E = mask_of(range(2 * l + 3, n))
    return {"A": A, "B": B, "C": C, "D": D, "E": E}


def build_gnk3(n: int, k: int) -> Graph:
    """The n-vertex graph G(n, k, 3).

    A u C and B u C are cliques on l + 1 vertices sharing the triangle C.
    The other n - k + 3 vertices (the four D vertices of the F_4 copy followed
    by E_{n-k-1}) are paired into independent edges, one left over when the
    count is odd, and every one of them is joined to all of C.
    """
    parts = gnk3_parts(n, k)
    A, B, C = parts["A"], parts["B"], parts["C"]
    rest = list(bits(parts["D"] | parts["E"]))
    edges = list(combinations(bits(A | C), 2)) + list(combinations(bits(B | C), 2))
    edges += [(rest[2 * i], rest[2 * i + 1]) for i in range(len(rest) // 2)]
    edges += [(c, x) for c in bits(C) for x in rest]
    return from_edges(n, edges)


# ---------------------------------------------------------------------------
# descriptors

@dataclass(frozen=True)
class FamilyDescriptor:
    ftype: str
    m: int
    k: int
    r: int
    A: tuple[int, ...] = ()
    B: tuple[int, ...] = ()
    C: tuple[int, ...] = ()
    D: tuple[int, ...] = ()
    layout: tuple[str, ...] = ()
    cd_paths: tuple[tuple[int, ...], ...] = ()
    missing: tuple[tuple[int, int], ...] = ()  # non-adjacent pairs of A u C touching A
    special: str | None = None
    labels: tuple[tuple[str, int], ...] = ()
    variant: str = ""

    def label(self, name: str) -> int:
        for key, v in self.labels:
            if key == name:
                return v
        raise KeyError(name)

    def mask(self, part: str) -> int:
        return mask_of(getattr(self, part))

    @property
    def has_ab(self) -> bool:
        return bool(self.A) and bool(self.B)

    def record(self) -> str:
        """Sidecar text record, one key=value per line."""
        lines = [f"type={self.ftype}", f"m={self.m}", f"k={self.k}", f"r={self.r}"]
        for part in "ABCD":
            lines.append(f"{part}={','.join(map(str, getattr(self, part)))}")
        lines.append(f"layout={'|'.join(self.layout)}")
        lines.append("paths=" + "|".join(",".join(map(str, p)) for p in self.cd_paths))
        lines.append("missing=" + ";".join(f"{u}-{v}" for u, v in self.missing))
        lines.append(f"special={self.special or ''}")
        lines.append("labels=" + ";".join(f"{k}:{v}" for k, v in self.labels))
        lines.append(f"variant={self.variant}")
        return "\n".join(lines) + "\n"


class Member(NamedTuple):
    descriptor: FamilyDescriptor
    graph: Graph


@dataclass
class _Spec:
    ftype: str
    m: int
    k: int
    r: int
    a_size: int
    b_size: int
    layout: tuple[str, ...]
    a_drop_pairs: tuple[tuple[int, int], ...] = ()   # non-edges inside A (A indices)
    a_drop_c: tuple[tuple[int, int], ...] = ()       # (A index, C index) non-edges
    extra: tuple[tuple[tuple[str, int], tuple[str, int]], ...] = ()
    special: str | None = None
    label_refs: tuple[tuple[str, tuple[str, int]], ...] = ()
    variant: str = ""


def _realize(sp: _Spec) -> Member:
    a, b = sp.a_size, sp.b_size
    nc = sum(s.count("C") for s in sp.layout)
    nd = sum(s.count("D") for s in sp.layout)
    A = list(range(a))
    B = list(range(a, a + b))
    C = list(range(a + b, a + b + nc))
    D = list(range(a + b + nc, a + b + nc + nd))
    ci = di = 0
    paths = []
    for s in sp.layout:
        p = []
        for sym in s:
            if sym == "C":
                p.append(C[ci])
                ci += 1
            else:
                p.append(D[di])
                di += 1
        paths.append(tuple(p))
    idx = {"A": A, "B": B, "C": C, "D": D}
    edges = set()
    drop = {tuple(sorted(q)) for q in sp.a_drop_pairs}
    for i, j in combinations(range(a), 2):
        if (i, j) not in drop:
            edges.add((A[i], A[j]))
    edges |= set(combinations(B, 2))
    dropc = set(sp.a_drop_c)
    for i in range(a):
        for c in range(nc):
            if (i, c) not in dropc:
                edges.add((A[i], C[c]))
    edges |= {(u, c) for u in B for c in C}
    for p in paths:
        edges |= {(min(u, v), max(u, v)) for u, v in zip(p, p[1:])}
    for (p1, i1), (p2, i2) in sp.extra:
        u, v = idx[p1][i1], idx[p2][i2]
        edges.add((min(u, v), max(u, v)))
    n = a + b + nc + nd
    g = from_edges(n, sorted(edges))
    missing = [(A[i], A[j]) for i, j in sorted(drop)] + [(A[i], C[c]) for i, c in sorted(dropc)]
    labels = tuple((name, idx[part][i]) for name, (part, i) in sp.label_refs)
    d = FamilyDescriptor(sp.ftype, sp.m, sp.k, sp.r, tuple(A), tuple(B), tuple(C), tuple(D),
                         sp.layout, tuple(paths), tuple(missing), sp.special, labels, sp.variant)
    return Member(d, g)


def _realize_type4(m: int, k: int, cycle_len: int, w_pos: int) -> Member:
    l = ell(k)
    A = list(range(l - 1))
    B = list(range(l - 1, 2 * l - 2))
    C = list(range(2 * l - 2, 2 * l - 2 + cycle_len))
    w1, w2, w = C[0], C[1], C[w_pos]
    edges = list(combinations(A, 2)) + list(combinations(B, 2))
    edges += [(C[i], C[(i + 1) % cycle_len]) for i in range(cycle_len)]
    edges += [(a, w1) for a in A] + [(b, w2) for b in B] + [(x, w) for x in A + B]
    g = from_edges(len(A) + len(B) + len(C), edges)
    layout = ("C" * cycle_len,)
    d = FamilyDescriptor("IV", m, k, l, tuple(A), tuple(B), tuple(C), (), layout, (tuple(C),), (),
                         None, (("w", w), ("w1", w1), ("w2", w2)), f"w_at={w_pos}")
    return Member(d, g)


# ---------------------------------------------------------------------------
# candidate generation per type

def _alt(nc: int) -> str:
    """C-path alternating C and single D vertices."""
    return "CD" * (nc - 1) + "C"


def _type1(m: int, k: int, r: int) -> list[_Spec]:
    l = ell(k)
    nc = l - r + 1
    out = []
    if nc >= 3:
        if m == k:
            out.append(_Spec("I", m, k, r, r, r, (_alt(nc),)))
    else:
        p = m - 2 * r - 2
        if p >= 1:
            out.append(_Spec("I", m, k, r, r, r, ("C" + "D" * p + "C",), variant=f"p={p}"))
    return out


def _a_patterns(r: int, nc: int):
    """Ways for r+1 vertices of A to each miss exactly one vertex of A u C.

    Non-edges inside A form a matching on A indices 0..2mu-1; every other A
    vertex misses one C vertex.  Unmatched A vertices are interchangeable, so
    their choices are taken as multisets.
    """
    a = r + 1
    for mu in range(a // 2 + 1):
        pairs = tuple((2 * i, 2 * i + 1) for i in range(mu))
        free = list(range(2 * mu, a))
        for choice in combinations_with_replacement(range(nc), len(free)):
            yield pairs, tuple(zip(free, choice))


def _type2(m: int, k: int, r: int) -> list[_Spec]:
    l = ell(k)
    nc = l - r + 1
    out = []
    layouts: list[tuple[int, str, str | None, tuple]] = []  # (a_size, layout, special, labels)
    if nc >= 3:
        if m == k:
            layouts.append((r + 1, _alt(nc), None, ()))
            for gap in range(nc - 1):
                s = "".join("C" + ("DD" if g == gap else "D") for g in range(nc - 1)) + "C"
                special = None
                labels: tuple = ()
                if r == l - 2:
                    special = "F0"
                    # the single D vertex and its two C neighbours
                    other = 1 - gap
                    labels = (("v", ("D", 0 if other == 0 else 2)),
                              ("v1", ("C", other)), ("v2", ("C", other + 1)))
                layouts.append((r, s, special, labels))
        if r == l - 2 and m == k + 1:
            layouts.append((r, "CDDCDDC", "F4", ()))
    else:
        for a_size in (r, r + 1):
            p = m - a_size - r - 2
            if p >= 1:
                layouts.append((a_size, "C" + "D" * p + "C", None, ()))
    seen_layouts = set()
    for a_size, s, special, labels in layouts:
        if a_size == r:
            key = (a_size, min(s, s[::-1]))
            if key in seen_layouts:
                continue
            seen_layouts.add(key)
            out.append(_Spec("II", m, k, r, r, r, (s,), special=special, label_refs=labels,
                             variant=f"|A|=r layout={s}"))
            continue
        for pairs, misses in _a_patterns(r, nc):
            sp_tag = None
            refs: tuple = ()
            if r == 2 and len(pairs) == 1:
                sp_tag = "F5"
                # the star centre is the A vertex outside the missing pair
                refs = (("u1", ("A", 2)),)
            sp_tag = special or sp_tag
            out.append(_Spec("II", m, k, r, r + 1, r, (s,), a_drop_pairs=pairs, a_drop_c=misses,
                             special=sp_tag, label_refs=refs,
                             variant=f"|A|=r+1 layout={s} pairs={pairs} misses={misses}"))
    return out


def _type3(m: int, k: int, r: int) -> list[_Spec]:
    l = ell(k)
    nc = l - r + 1
    out = []
    # F1: C-path plus an isolated D vertex x joined to two A vertices
    if r >= 2:
        if nc >= 3:
            main = [_alt(nc)] if m == k else []
        else:
            p = m - 2 * r - 3
            main = ["C" + "D" * p + "C"] if p >= 1 else []
        for s in main:
            nd_main = s.count("D")
            out.append(_Spec("III", m, k, r, r, r, (s, "D"),
                             extra=((("D", nd_main), ("A", 0)), (("D", nd_main), ("A", 1))),
                             special="F1",
                             label_refs=(("x", ("D", nd_main)), ("x1", ("A", 0)), ("x2", ("A", 1))),
                             variant=f"layout={s}|D"))
    # F2: one path starting at y in D, y joined to a single A vertex
    if nc >= 3:
        main = ["D" + _alt(nc)] if m == k else []
    else:
        p = m - 2 * r - 3
        main = ["DC" + "D" * p + "C"] if p >= 1 else []
    for s in main:
        out.append(_Spec("III", m, k, r, r, r, (s,), extra=((("D", 0), ("A", 0)),), special="F2",
                         label_refs=(("y", ("D", 0)), ("y1", ("A", 0)), ("y2", ("C", 0))),
                         variant=f"layout={s}"))
    # F3: path z ... z' through j C vertices plus a C-path through i C vertices
    if r >= 2 and m == k:
        for j in range(1, nc):
            i = nc - j
            first = "D" + "C" + "DC" * (j - 1) + "D"
            second = "C" + "DC" * (i - 1)
            zp = first.count("D") - 1
            out.append(_Spec("III", m, k, r, r, r, (first, second),
                             extra=((("D", 0), ("A", 0)), (("D", zp), ("A", 1))), special="F3",
                             label_refs=(("z", ("D", 0)), ("z'", ("D", zp)), ("z1", ("A", 0)),
                                         ("z1'", ("A", 1)), ("z2", ("C", 0)), ("z2'", ("C", j - 1))),
                             variant=f"j={j} i={i}"))
    return out


def _type4(m: int, k: int) -> list[Member]:
    l = ell(k)
    c = m - 2 * (l - 1)
    out = []
    for w_pos in range(3, c - 1):
        out.append(_realize_type4(m, k, c, w_pos))
    return out


def family_candidates(m: int, k: int, r: int) -> list[Member]:
    """All constructed layouts for F(m, k, r) before validation and deduplication."""
    l = ell(k)
    if m < k or not (1 <= r <= l):
        raise OutOfDomain(f"need m >= k >= 5 and 1 <= r <= l, got m={m} k={k} r={r}")
    specs: list[_Spec] = []
    members: list[Member] = []
    if k % 2:
        if r <= l - 1:
            specs += _type1(m, k, r)
    else:
        if r <= l - 1:
            specs += _type2(m, k, r)
            specs += _type3(m, k, r)
        else:
            members += _type4(m, k)
    return [_realize(sp) for sp in specs] + members


# ---------------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    circumference: int | None = None
    hamilton_path: list[int] | None = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def _deg_in(g: Graph, v: int, s: int) -> int:
    return (g.adj[v] & s).bit_count()


def _complete_between(g: Graph, s: int, t: int) -> bool:
    return all(g.adj[v] & t == t for v in bits(s))


def _no_edges_between(g: Graph, s: int, t: int) -> bool:
    return all(not g.adj[v] & t for v in bits(s))


def _is_c_path(g: Graph, cd: int, c: int) -> bool:
    order = path_order(g, cd)
    return order is not None and len(order) >= 2 and (c >> order[0] & 1) and (c >> order[-1] & 1)


def _allowed_edges(d: FamilyDescriptor) -> set[tuple[int, int]]:
    A, B, C, D = d.A, d.B, d.C, d.D
    pairs = set()

    def add(xs, ys):
        for u in xs:
            for v in ys:
                if u != v:
                    pairs.add((min(u, v), max(u, v)))

    add(A, A)
    add(B, B)
    add(A, C)
    add(B, C)
    add(C, D)
    add(D, D)
    if d.ftype == "IV":
        add(C, C)
    lab = dict(d.labels)
    for x, nbrs in (("x", ("x1", "x2")), ("y", ("y1",)), ("z", ("z1",)), ("z'", ("z1'",))):
        if x in lab:
            for y in nbrs:
                u, v = lab[x], lab[y]
                pairs.add((min(u, v), max(u, v)))
    return pairs


def _bullets(g: Graph, d: FamilyDescriptor) -> dict[str, bool]:
    k, r = d.k, d.r
    l = ell(k)
    A, B, C, D = (d.mask(p) for p in "ABCD")
    ch: dict[str, bool] = {}
    ch["partition"] = (A | B | C | D) == g.full and sum(len(x) for x in (d.A, d.B, d.C, d.D)) == g.n
    allowed = _allowed_edges(d)
    ch["no_other_edges"] = all(e in allowed for e in g.edges())
    if d.ftype == "I":
        ch["k_odd"] = k % 2 == 1
        ch["r_range"] = 1 <= r <= l - 1
        ch["A_clique_r"] = len(d.A) == r and is_clique(g, A)
        ch["B_clique_r"] = len(d.B) == r and is_clique(g, B)
        ch["C_empty_size"] = len(d.C) == l - r + 1 and is_independent(g, C)
        if len(d.C) >= 3:
            ch["D_shape"] = is_independent(g, D)
        else:
            ch["D_shape"] = bool(D) and is_path_graph(g, D)
        ch["AB_complete_to_C"] = _complete_between(g, A | B, C)
        ch["CD_is_C_path"] = _is_c_path(g, C | D, C)
    elif d.ftype == "II":
        ch["k_even"] = k % 2 == 0
        ch["r_range"] = 1 <= r <= l - 1
        ch["A_size"] = len(d.A) in (r, r + 1)
        ch["B_clique_r"] = len(d.B) == r and is_clique(g, B)
        ch["C_empty_size"] = len(d.C) == l - r + 1 and is_independent(g, C)
        d_edges = sum(_deg_in(g, v, D) for v in bits(D)) // 2
        if len(d.C) == 2:
            ch["D_shape"] = bool(D) and is_path_graph(g, D)
        else:
            matching = all(_deg_in(g, v, D) <= 1 for v in bits(D)) and d_edges <= 2
            if len(d.A) == r + 1:
                cond = d_edges == 0
            else:
                cond = d_edges == 1 or (d_edges == 2 and r == l - 2)
            ch["D_shape"] = matching and cond
        ch["A_degree_l"] = all(_deg_in(g, v, A | C) == l for v in bits(A))
        ch["B_degree_l"] = all(_deg_in(g, v, B | C) == l for v in bits(B))
        ch["CD_is_C_path"] = _is_c_path(g, C | D, C)
        if ch["CD_is_C_path"] and len(d.A) == r + 1:
            order = path_order(g, C | D)
            ch["path_ends_see_A"] = all(g.adj[e] & A for e in (order[0], order[-1]))
        if r == 1 and len(d.A) == 2:
            ch["A_edge_when_r1"] = is_clique(g, A)
        if d.special in ("F0", "F4"):
            ch["special_shape"] = len(d.A) == r == l - 2 and len(d.D) == (3 if d.special == "F0" else 4)
        if d.special == "F5":
            deg = sorted(_deg_in(g, v, A) for v in bits(A))
            ch["special_shape"] = r == 2 and len(d.A) == 3 and deg == [1, 1, 2]
    elif d.ftype == "III":
        ch["k_even"] = k % 2 == 0
        ch["r_range"] = 1 <= r <= l - 1
        ch["A_clique_r"] = len(d.A) == r and is_clique(g, A)
        ch["B_clique_r"] = len(d.B) == r and is_clique(g, B)
        ch["C_empty_size"] = len(d.C) == l - r + 1 and is_independent(g, C)
        if len(d.C) >= 3:
            ch["D_shape"] = is_independent(g, D)
        else:
            comps = components(g, D)
            ch["D_shape"] = (len(comps) == 2 and any(c.bit_count() == 1 for c in comps)
                             and all(is_path_graph(g, c) for c in comps))
        ch["AB_complete_to_C"] = _complete_between(g, A | B, C)
        comps = components(g, C | D)
        ch["CD_at_most_two_paths"] = len(comps) <= 2 and all(is_path_graph(g, c) for c in comps)
        lab = dict(d.labels)
        if d.special == "F1":
            x = lab["x"]
            rest = (C | D) & ~(1 << x)
            ch["F1_shape"] = (len(comps) == 2 and (1 << x) in comps and _is_c_path(g, rest, C)
                              and g.adj[x] & A == (1 << lab["x1"]) | (1 << lab["x2"])
                              and lab["x1"] != lab["x2"])
        elif d.special == "F2":
            y = lab["y"]
            order = path_order(g, C | D)
            ch["F2_shape"] = (order is not None and y in (order[0], order[-1]) and D >> y & 1
                              and _deg_in(g, y, D) == 0 and g.adj[y] & A == 1 << lab["y1"])
        elif d.special == "F3":
            z, zp = lab["z"], lab["z'"]
            ok = len(comps) == 2 and len(d.D) == l - r + 1
            if ok:
                pz = next(c for c in comps if c >> z & 1)
                other = next(c for c in comps if not c >> z & 1)
                o1, o2 = path_order(g, pz), path_order(g, other)
                ok = (o1 is not None and o2 is not None and z != zp
                      and {o1[0], o1[-1]} == {z, zp} and D >> z & 1 and D >> zp & 1
                      and C >> o2[0] & 1 and C >> o2[-1] & 1)
            ok = ok and g.adj[z] & A == 1 << lab["z1"] and g.adj[zp] & A == 1 << lab["z1'"]
            ch["F3_shape"] = ok and lab["z1"] != lab["z1'"]
        else:
            ch["F3_shape"] = False
    elif d.ftype == "IV":
        lab = dict(d.labels)
        w, w1, w2 = lab["w"], lab["w1"], lab["w2"]
        ch["k_even"] = k % 2 == 0
        ch["r_is_l"] = r == l
        ch["A_clique"] = len(d.A) == l - 1 and is_clique(g, A)
        ch["B_clique"] = len(d.B) == l - 1 and is_clique(g, B)
        ch["no_D"] = not d.D
        c_cycle = all(_deg_in(g, v, C) == 2 for v in bits(C)) and len(components(g, C)) == 1
        ch["C_cycle"] = c_cycle and len(d.C) >= 3
        ch["w_positions"] = (len({w, w1, w2}) == 3 and g.has_edge(w1, w2)
                             and not g.has_edge(w, w1) and not g.has_edge(w, w2))
        ch["w1_to_A"] = _complete_between(g, 1 << w1, A)
        ch["w2_to_B"] = _complete_between(g, 1 << w2, B)
        ch["w_to_AB"] = _complete_between(g, 1 << w, A | B)
    else:
        ch["known_type"] = False
    return ch


def validate_member(g: Graph, d: FamilyDescriptor) -> ValidationReport:
    rep = ValidationReport()
    rep.checks["order"] = g.n == d.m
    if d.ftype == "Fell":
        pass
    elif g.n == sum(len(x) for x in (d.A, d.B, d.C, d.D)):
        rep.checks.update(_bullets(g, d))
    else:
        rep.checks["partition"] = False
    c = circumference(g)
    rep.circumference = 0 if c is None else c[0]
    rep.checks["circumference_below_k"] = rep.circumference < d.k
    if d.has_ab:
        rep.hamilton_path = hamilton_path(g, d.mask("A"), d.mask("B"))
        rep.checks["hamilton_A_to_B"] = rep.hamilton_path is not None
    return rep


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def _enumerate_family_cached(m: int, k: int, r: int) -> tuple[Member, ...]:
    seen: dict[bytes, Member] = {}
    for mem in family_candidates(m, k, r):
        if not validate_member(mem.graph, mem.descriptor).ok:
            continue
        key = canonical_form(mem.graph)
        if key not in seen:
            seen[key] = mem
    return tuple(seen[key] for key in sorted(seen))


def enumerate_family(m: int, k: int, r: int) -> list[Member]:
    """One validated representative per isomorphism class of F(m, k, r), sorted by canonical form."""
    return list(_enumerate_family_cached(m, k, r))


def special_variants(tag: str, m: int, k: int, r: int) -> list[Member]:
    if tag not in SPECIAL_TAGS:
        raise InvalidParameters(f"unknown special graph {tag}")
    if tag == "F5" and r != 2:
        raise InvalidParameters("F5 is only defined for r = 2")
    try:
        members = enumerate_family(m, k, r)
    except OutOfDomain as exc:
        raise InvalidParameters(str(exc)) from exc
    return [mem for mem in members if mem.descriptor.special == tag]


def build_special(tag: str, m: int, k: int, r: int, variant: int = 0) -> Member:
    found = special_variants(tag, m, k, r)
    if not found:
        raise InvalidParameters(f"no {tag} graph for m={m} k={k} r={r}")
    if not 0 <= variant < len(found):
        raise InvalidParameters(f"{tag}({m},{k},{r}) has {len(found)} variants")
    return found[variant]


def f_ell_member(l: int) -> Member:
    g = build_f_ell(l)
    k = 2 * l + 2
    d = FamilyDescriptor("Fell", g.n, k, l, variant=f"l={l}")
    return Member(d, g)


@dataclass(frozen=True)
class KFamilySpec:
    k: int
    alpha: int
    m_max: int | None = None

    def __post_init__(self):
        l = ell(self.k)
        if not 0 <= self.alpha <= max(l - 2, 0):
            raise OutOfDomain(f"alpha must lie in 0..l-2 = {l - 2}, got {self.alpha}")

    @property
    def cap(self) -> int:
        return self.k + 1 if self.m_max is None else self.m_max


@lru_cache(maxsize=None)
def _k_family(k: int, alpha: int, cap: int) -> tuple[tuple[str, Member], ...]:
    l = ell(k)
    if alpha == 0:
        return ()
    even = k % 2 == 0
    items: list[tuple[str, Member]] = []
    rs = list(range(1, alpha + 1)) + [l - 1] + ([l] if even else [])
    for r in sorted(set(rs)):
        for m in range(k, cap + 1):
            items += [("a", mem) for mem in enumerate_family(m, k, r)]
    if even and k >= 10 and l - alpha <= 3:
        items += [("b", mem) for mem in special_variants("F0", k, k, l - 2)]
        items += [("b", mem) for mem in special_variants("F4", k + 1, k, l - 2)]
    if even and alpha + 1 <= l - 2:
        for m in range(k, cap + 1):
            items += [("c", mem) for mem in special_variants("F2", m, k, alpha + 1)]
    if even and alpha == 1:
        for m in range(k, cap + 1):
            items += [("d", mem) for mem in special_variants("F5", m, k, 2)]
    if even:
        items.append(("e", f_ell_member(l)))
    seen: dict[bytes, tuple[str, Member]] = {}
    for item, mem in items:
        key = canonical_form(mem.graph)
        if key not in seen:
            seen[key] = (item, mem)
    ordered = sorted(seen.items(), key=lambda kv: (kv[1][1].graph.n, kv[0]))
    return tuple(v for _, v in ordered)


def enumerate_k_family(spec: KFamilySpec) -> list[Member]:
    """Members of the forbidden family for (k, alpha) with at most ``spec.cap`` vertices
    (F_4(k+1, k, l-2) is always included when it belongs)."""
    return [mem for _, mem in _k_family(spec.k, spec.alpha, spec.cap)]


def k_family_items(spec: KFamilySpec) -> list[tuple[str, Member]]:
    """Like ``enumerate_k_family`` but tagged with the defining item letter."""
    return list(_k_family(spec.k, spec.alpha, spec.cap))


def member_id(mem: Member) -> str:
    """Stable human-readable identifier of a generated member."""
    d = mem.descriptor
    tag = d.special or ("F(l)" if d.ftype == "Fell" else f"type{d.ftype}")
    return f"{tag}({d.m},{d.k},{d.r}):{d.variant}"


def contains_k_family_member(g: Graph, spec: KFamilySpec) -> tuple[str, dict[int, int]] | None:
    """First member (by order, then canonical string) that embeds in g, with the embedding."""
    for mem in enumerate_k_family(spec):
        if mem.graph.n > g.n:
            break
        emb = contains_subgraph(g, mem.graph)
        if emb is not None:
            return member_id(mem), emb
    return None
