"""Suites over generated family members and closed-form counts: member validity,
path and cycle properties of members, the clique-count bounds for graphs
containing a member, the Pósa construction sweep and the near-complete
two-terminal graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from ..cliques import clique_counts
from ..cycles import (circumference, cycle_through_edge_of_length, hamilton_path,
                      longest_cycle_through_edge, longest_path_from, longest_path_through_edge)
from ..errors import InvalidParameters
from ..families import (SPECIAL_TAGS, KFamilySpec, Member, enumerate_family, enumerate_k_family,
                        member_id, special_variants)
from ..formulas import C, ell, f_s, g_s, g_s_construction, h_s
from ..graph import Graph, complete_graph, is_connected, is_cycle, is_two_connected, mask_of
from ..graph6 import encode
from ..posa import greedy_maximal_paths, posa_cycle
from ..structure import is_star_forest
from .common import load_graphs, nonempty
from .engine import FAIL, PASS, SKIP, Outcome, Suite, outcome


def _count(counts: list[int], s: int) -> int:
    return counts[s] if s < len(counts) else 0


class _MemberSuite(Suite):
    """Items are family members, identified by member id."""

    def item_id(self, item) -> str:
        return member_id(item)

    def load_item(self, item_id: str, cfg):
        for mem in self.items(cfg):
            if member_id(mem) == item_id:
                return mem
        raise InvalidParameters(f"unknown member {item_id}")


def _members(k_range, m_max_over_k: int, r_filter) -> list[Member]:
    out = []
    for k in k_range:
        l = ell(k)
        for m in range(k, k + m_max_over_k + 1):
            for r in range(1, l + 1):
                if r_filter(r, l):
                    out += enumerate_family(m, k, r)
    return out


# ---------------------------------------------------------------------------

@dataclass
class FamilyValidityConfig:
    k: list[int] | None = None
    extra_m: int = 1
    include_k_family: bool = True


class FamilyValidity(_MemberSuite):
    """Every emitted member has m vertices, circumference below k and (when it
    has classes A and B) a Hamilton path from A to B, recomputed from scratch."""
    name = "families"
    config_cls = FamilyValidityConfig

    def resolve(self, cfg):
        k = nonempty("k", cfg.k if cfg.k is not None else range(5, 13))
        if min(k) < 5:
            raise InvalidParameters("k must be at least 5")
        return replace(cfg, k=k)

    def items(self, cfg):
        seen: dict[str, Member] = {}
        for k in cfg.k:
            l = ell(k)
            for m in range(k, k + cfg.extra_m + 1):
                for r in range(1, l + 1):
                    for mem in enumerate_family(m, k, r):
                        seen.setdefault(member_id(mem), mem)
                    for tag in SPECIAL_TAGS:
                        if tag == "F5" and r != 2:
                            continue
                        for mem in special_variants(tag, m, k, r):
                            seen.setdefault(member_id(mem), mem)
            if cfg.include_k_family:
                for alpha in range(0, max(l - 2, 0) + 1):
                    for mem in enumerate_k_family(KFamilySpec(k, alpha)):
                        seen.setdefault(member_id(mem), mem)
        return [seen[key] for key in sorted(seen)]

    def check(self, mem: Member, cfg) -> list[Outcome]:
        d, g = mem.descriptor, mem.graph
        p = {"k": d.k, "m": d.m, "type": d.ftype}
        found = circumference(g)
        c = 0 if found is None else found[0]
        problems = {}
        if g.n != d.m:
            problems["order"] = g.n
        if c >= d.k:
            problems["circumference"] = c
        if d.has_ab:
            if hamilton_path(g, d.mask("A"), d.mask("B")) is None:
                problems["hamilton_A_to_B"] = None
        else:
            return [outcome(p, FAIL if problems else SKIP, reason="no A/B classes",
                            observed=problems, claim="order/circumference")]
        if problems:
            return [outcome(p, FAIL, observed=problems, expected={"order": d.m, "circumference_lt": d.k},
                            claim="member-validity")]
        return [outcome(p, PASS)]


# ---------------------------------------------------------------------------

def _labels(mem: Member) -> dict[str, int]:
    return dict(mem.descriptor.labels)


def special_edge(mem: Member, a: int, b: int) -> bool:
    """Edges of a member promised only a (k-2)-cycle."""
    d = mem.descriptor
    lab = _labels(mem)
    pair = {a, b}
    named = [("x1", "x2"), ("z1", "z2"), ("z1'", "z2'"), ("v", "v1"), ("v", "v2"), ("y1", "y2")]
    for u, v in named:
        if u in lab and v in lab and pair == {lab[u], lab[v]}:
            return True
    cset = set(d.C)
    if "u1" in lab and lab["u1"] in pair and pair - {lab["u1"]} <= cset:
        return True
    if d.r >= 2 and "y1" in lab and lab["y1"] in pair and pair - {lab["y1"]} <= cset:
        return True
    return False


def special_non_edge(mem: Member, a: int, b: int) -> bool:
    """Non-edges inside A u B u D promised only a (k-1)-cycle in F + ab."""
    d = mem.descriptor
    lab = _labels(mem)
    pair = {a, b}
    aset = set(d.A)
    if pair <= aset:
        return True
    for extra in ("x", "y"):
        if extra in lab and pair <= aset | {lab[extra]}:
            return True
    if "u1" in lab and lab["u1"] in pair:
        return True
    if d.r >= 2 and "y1" in lab and lab["y1"] in pair:
        return True
    return False


def attach_to_core(mem: Member, rng: random.Random, max_new: int = 3,
                   independent: bool = False) -> Graph:
    """Add 1..max_new new vertices, each joined to a random subset of C of size >= 1
    (>= 2 when ``independent``); unless ``independent``, a new vertex may also be
    joined to an earlier new vertex."""
    d, g = mem.descriptor, mem.graph
    cs = list(d.C)
    new = []
    for _ in range(rng.randint(1, max_new)):
        lo = 2 if independent else 1
        size = rng.randint(min(lo, len(cs)), len(cs))
        nb = mask_of(rng.sample(cs, size))
        if new and not independent and rng.random() < 0.5:
            nb |= 1 << rng.choice(new)
        g = g.add_vertex(nb)
        new.append(g.n - 1)
    return g


@dataclass
class PropPathsConfig:
    k: list[int] | None = None
    extra_m: int = 1
    trials: int = 20
    seed: int = 0


class PropPaths(_MemberSuite):
    """Cycle lengths through edges and added non-edges of members with 1 <= r <= l-2,
    and the star-forest structure of 2-connected supergraphs with circumference below k."""
    name = "prop_paths"
    config_cls = PropPathsConfig

    def resolve(self, cfg):
        k = nonempty("k", cfg.k if cfg.k is not None else [10, 12])
        if min(k) < 9:
            raise InvalidParameters("members with 1 <= r <= l-2 need k >= 9")
        return replace(cfg, k=k)

    def items(self, cfg):
        return _members(cfg.k, cfg.extra_m, lambda r, l: 1 <= r <= l - 2)

    def check(self, mem: Member, cfg) -> list[Outcome]:
        d, g = mem.descriptor, mem.graph
        k = d.k
        base = {"k": k, "m": d.m, "r": d.r}
        out = []
        # (i) edges
        bad = []
        for a, b in g.edges():
            length = k - 2 if special_edge(mem, a, b) else k - 1
            if cycle_through_edge_of_length(g, a, b, length) is None:
                found = longest_cycle_through_edge(g, a, b)
                bad.append({"edge": [a, b], "wanted": length, "longest": found[0] if found else 0})
        out.append(self._result({**base, "check": "i"}, bad, "edge-cycle"))
        # (ii) non-edges inside A u B u D
        abd = set(d.A) | set(d.B) | set(d.D)
        cset = set(d.C)
        bad = []
        for a, b in g.non_edges():
            if {a, b} <= abd:
                h = g.add_edge(a, b)
                if special_non_edge(mem, a, b):
                    ok = cycle_through_edge_of_length(h, a, b, k - 1) is not None
                    want = ("exactly", k - 1)
                else:
                    found = longest_cycle_through_edge(h, a, b)
                    ok = found is not None and found[0] >= k
                    want = ("at least", k)
                if not ok:
                    bad.append({"non_edge": [a, b], "wanted": list(want)})
        out.append(self._result({**base, "check": "ii"}, bad, "non-edge-cycle"))
        # (iii) non-edges between A u B u D and C
        u1 = _labels(mem).get("u1")
        bad = []
        for a, b in g.non_edges():
            if len({a, b} & cset) == 1 and len({a, b} & abd) == 1:
                want = k - 2
                other = ({a, b} - cset).pop()
                if other in d.A and u1 not in (a, b):
                    want = k - 1
                found = longest_cycle_through_edge(g.add_edge(a, b), a, b)
                if found is None or found[0] < want:
                    bad.append({"non_edge": [a, b], "wanted": want, "longest": found[0] if found else 0})
        out.append(self._result({**base, "check": "iii"}, bad, "core-non-edge-cycle"))
        # (iv) supergraphs
        rng = random.Random(f"{cfg.seed}:{member_id(mem)}")
        abc = d.mask("A") | d.mask("B") | d.mask("C")
        for t in range(cfg.trials):
            h = attach_to_core(mem, rng)
            p = {**base, "check": "iv"}
            if not is_two_connected(h):
                out.append(outcome(p, SKIP, reason="supergraph not 2-connected"))
                continue
            found = circumference(h, stop_at=k)
            if found is not None and found[0] >= k:
                out.append(outcome(p, SKIP, reason="supergraph has c>=k"))
                continue
            if is_star_forest(h, h.full & ~abc):
                out.append(outcome(p, PASS))
            else:
                out.append(outcome(p, FAIL, observed={"trial": t, "graph6": encode(h)},
                                   claim="star-forest"))
        return out

    @staticmethod
    def _result(p: dict, bad: list, claim: str) -> Outcome:
        if bad:
            return outcome(p, FAIL, observed=bad[:5], expected=None, claim=claim,
                           tags=(f"bad={len(bad)}",))
        return outcome(p, PASS)


# ---------------------------------------------------------------------------

@dataclass
class TwoTerminalConfig:
    n_max: int = 10
    n_min: int = 6


def two_terminal_graphs(n: int) -> list[tuple[tuple[int, int, int], Graph]]:
    """Connected n-vertex graphs with a non-edge c1c2 (vertices 0 and 1) in which every
    other vertex has degree n-2, one per isomorphism type (a0, a1, a2).

    The complement is the edge c1c2 plus a perfect matching on a0 vertices, a
    star from c1 to a1 vertices and a star from c2 to a2 vertices.
    """
    out = []
    for a0 in range(0, n - 1, 2):
        for a1 in range(0, n - 2 - a0 + 1):
            a2 = n - 2 - a0 - a1
            if a1 > a2:
                continue
            g = complete_graph(n).remove_edge(0, 1)
            rest = list(range(2, n))
            for i in range(0, a0, 2):
                g = g.remove_edge(rest[i], rest[i + 1])
            for v in rest[a0:a0 + a1]:
                g = g.remove_edge(0, v)
            for v in rest[a0 + a1:]:
                g = g.remove_edge(1, v)
            if is_connected(g):
                out.append(((a0, a1, a2), g))
    return out


class TwoTerminal(Suite):
    """Hamilton-type paths between the two low-degree terminals of a near-complete graph."""
    name = "two_terminal"
    config_cls = TwoTerminalConfig

    def resolve(self, cfg):
        if cfg.n_min < 6:
            raise InvalidParameters("needs n >= 6")
        return cfg

    def items(self, cfg):
        return [g for n in range(cfg.n_min, cfg.n_max + 1) for _, g in two_terminal_graphs(n)]

    def check(self, g: Graph, cfg) -> list[Outcome]:
        n = g.n
        c1, c2 = 0, 1
        ends = (1 << c1) | (1 << c2)
        base = {"n": n, "d1": g.degree(c1), "d2": g.degree(c2)}
        out = []
        bad = []
        for a, b in g.edges():
            path = longest_path_through_edge(g, c1, c2, a, b)
            if path is None or len(path) < n:
                bad.append([a, b])
        out.append(PropPaths._result({**base, "check": "i"}, bad, "hamilton-through-edge"))
        bad = []
        for v in range(2, n):
            path = longest_path_from(g, v, ends, stop_at=n - 1)
            if path is None or len(path) < n - 1:
                bad.append(v)
        out.append(PropPaths._result({**base, "check": "ii"}, bad, "long-path-to-terminal"))
        p = {**base, "check": "iii"}
        if {g.degree(c1), g.degree(c2)} == {1, n - 3}:
            out.append(outcome(p, SKIP, reason="terminal degrees {1, n-3}"))
        else:
            bad = []
            for a, b in g.non_edges():
                if {a, b} == {c1, c2}:
                    continue
                path = longest_path_through_edge(g.add_edge(a, b), c1, c2, a, b)
                if path is None or len(path) < n:
                    bad.append([a, b])
            out.append(PropPaths._result(p, bad, "hamilton-through-non-edge"))
        return out


# ---------------------------------------------------------------------------

@dataclass
class LemmaCountsConfig:
    k: list[int] | None = None
    n_extra: int = 20
    s: list[int] | None = None
    spot_k: list[int] | None = None
    trials: int = 10
    seed: int = 0


def member_bound(mem: Member, n: int, s: int) -> tuple[int, str]:
    """Clique-count bound for an n-vertex 2-connected graph with c < k containing ``mem``."""
    d = mem.descriptor
    k, r, l = d.k, d.r, ell(d.k)
    if d.special == "F2" and d.m == k:
        gamma = min(l - r + 2, l)
        return min(h_s(n, k, t, s) for t in range(gamma, l + 1)), "F2"
    if d.special == "F5" and d.m == k:
        return h_s(n, k, l, s), "F5"
    if d.special in ("F0", "F4") and r == l - 2:
        vals = [g_s(n, k, s)] + [h_s(n, k, t, s) for t in range(4, l + 1)]
        return min(vals), d.special
    return min(h_s(n, k, t, s) for t in range(l - r + 1, l + 1)), "other"


class LemmaCounts(Suite):
    """f_s(n,k,r) <= h_s(n,k,t) for t >= l-r+1 over the full grid, the displayed
    g_s chain evaluated cell by cell (reported, not asserted), and the clique-count
    bounds on 2-connected supergraphs of members with independent vertices attached to C."""
    name = "lemma_counts"
    config_cls = LemmaCountsConfig

    def resolve(self, cfg):
        k = nonempty("k", cfg.k if cfg.k is not None else range(9, 15))
        s = nonempty("s", cfg.s if cfg.s is not None else range(2, 6))
        spot = nonempty("spot_k", cfg.spot_k if cfg.spot_k is not None else [9, 10, 11, 12])
        if min(k) < 9 or min(spot) < 9 or min(s) < 2:
            raise InvalidParameters("needs k >= 9 and s >= 2")
        return replace(cfg, k=k, s=s, spot_k=spot)

    def items(self, cfg):
        items: list = [("formula", k, n) for k in cfg.k for n in range(k, k + cfg.n_extra + 1)]
        for mem in _members(cfg.spot_k, 1, lambda r, l: 1 <= r <= l - 2):
            items.append(("spot", mem))
        return items

    def item_id(self, item) -> str:
        if item[0] == "formula":
            return f"formula:k={item[1]}:n={item[2]}"
        return "spot:" + member_id(item[1])

    def load_item(self, item_id: str, cfg):
        if item_id.startswith("formula:"):
            _, k, n = item_id.split(":")
            return ("formula", int(k[2:]), int(n[2:]))
        for item in self.items(cfg):
            if item[0] == "spot" and self.item_id(item) == item_id:
                return item
        raise InvalidParameters(f"unknown item {item_id}")

    def check(self, item, cfg) -> list[Outcome]:
        if item[0] == "formula":
            return self._formula(item[1], item[2], cfg)
        return self._spot(item[1], cfg)

    def _formula(self, k: int, n: int, cfg) -> list[Outcome]:
        l = ell(k)
        out = []
        for r in range(1, l - 1):
            for s in cfg.s:
                f = f_s(n, k, r, s)
                for t in range(l - r + 1, l + 1):
                    p = {"k": k, "n": n, "r": r, "s": s, "t": t, "check": "claim"}
                    h = h_s(n, k, t, s)
                    if f <= h:
                        out.append(outcome(p, PASS))
                    else:
                        out.append(outcome(p, FAIL, observed=f, expected=h, claim="f_s<=h_s"))
        return out

    def _spot(self, mem: Member, cfg) -> list[Outcome]:
        d = mem.descriptor
        rng = random.Random(f"{cfg.seed}:{member_id(mem)}")
        out = []
        for t in range(cfg.trials):
            h = attach_to_core(mem, rng, independent=True)
            p = {"k": d.k, "m": d.m, "r": d.r, "check": "spot"}
            if not is_two_connected(h):
                out.append(outcome(p, SKIP, reason="supergraph not 2-connected"))
                continue
            found = circumference(h, stop_at=d.k)
            if found is not None and found[0] >= d.k:
                out.append(outcome(p, SKIP, reason="supergraph has c>=k"))
                continue
            counts = clique_counts(h)
            bad = []
            for s in cfg.s:
                bound, case = member_bound(mem, h.n, s)
                if _count(counts, s) > bound:
                    bad.append({"s": s, "N_s": _count(counts, s), "bound": bound, "case": case})
            if bad:
                out.append(outcome(p, FAIL, observed={"trial": t, "graph6": encode(h), "bad": bad},
                                   claim="member-clique-bound"))
            else:
                out.append(outcome(p, PASS))
        return out

    def observations(self, cfg, tally) -> dict:
        return {"g_s_chain": g_chain(cfg.k, cfg.n_extra, cfg.s)}


def g_chain(k_range, n_extra: int, s_range) -> dict:
    """Evaluate the displayed chain g_s <= middle(t) <= h_s(n,k,t), t = 4..l, together
    with the auxiliary parity inequality, and compare g_s with the exact count of
    the n-vertex construction."""
    cells = 0
    findings = []
    mismatch = 0
    for k in k_range:
        if k % 2 or k < 10:
            continue
        l = ell(k)
        for n in range(k, k + n_extra + 1):
            i = (n - k + 3) % 2
            for s in s_range:
                g = g_s(n, k, s)
                if g != g_s_construction(n, k, s):
                    mismatch += 1
                aux_l = (n - k + 3) // 2 * (C(5, s) - C(3, s)) + i * C(4, s)
                aux_r = (n - k + 4) * C(4, s - 1) - C(4, s)
                for t in range(4, l + 1):
                    cells += 1
                    mid = C(k - t, s) + C(t, s) + (n - k + 4) * C(4, s - 1) - C(4, s)
                    h = h_s(n, k, t, s)
                    steps = {"g<=middle": g <= mid, "middle<=h": mid <= h, "aux": aux_l <= aux_r}
                    failed = [name for name, ok in steps.items() if not ok]
                    if failed:
                        findings.append({"k": k, "n": n, "s": s, "t": t, "g_s": g, "middle": mid,
                                         "h_s": h, "failed": failed})
    return {"cells": cells, "findings": len(findings), "examples": findings[:20],
            "formula_vs_construction_mismatches": mismatch}


# ---------------------------------------------------------------------------

@dataclass
class PosaConfig:
    n_max: int = 8
    n_min: int = 3
    deep: bool = False


class PosaSweep(Suite):
    """posa_cycle meets min{m, d(x_1)+d(x_m)+bonus} on every greedy maximal path."""
    name = "posa"
    config_cls = PosaConfig

    def items(self, cfg):
        return load_graphs(cfg.n_min, cfg.n_max, two_connected=True, deep=cfg.deep)

    def narrow(self, cfg, params):
        return replace(cfg, n_min=params["n"], n_max=params["n"])

    def check(self, g: Graph, cfg) -> list[Outcome]:
        bad = []
        methods = set()
        for path in greedy_maximal_paths(g):
            res = posa_cycle(g, path)
            methods.add(res.method)
            if not (is_cycle(g, res.cycle) and res.meets_bound):
                bad.append({"path": path, "length": res.length, "target": res.target})
        p = {"n": g.n}
        tags = tuple(sorted(f"method={m}" for m in methods))
        if bad:
            return [outcome(p, FAIL, observed=bad[:3], claim="posa-bound", tags=tags)]
        return [outcome(p, PASS, tags=tags)]
