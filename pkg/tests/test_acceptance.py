"""One test per acceptance criterion, each at its stated scale and tolerance."""

import json
import time

import pytest

from egstab.cliques import clique_counts
from egstab.cycles import circ, hamilton_path
from egstab.enumeration import two_connected_graphs
from egstab.families import (KFamilySpec, build_gnk3, build_h, enumerate_family,
                             enumerate_k_family, special_variants, SPECIAL_TAGS)
from egstab.formulas import ell, f_s, g_s, h_s
from egstab.verify import get_suite, make_config, run, run_suite, strip_timing


def _n_s(counts, s):
    return counts[s] if s < len(counts) else 0


def test_01_h_formula_matches_construction(verdict):
    t0 = time.perf_counter()
    bad, cells = [], 0
    for k in range(5, 13):
        for a in range(1, k // 2 + 1):
            for n in range(k, 31):
                counts = clique_counts(build_h(n, k, a))
                for s in range(2, 6):
                    cells += 1
                    if _n_s(counts, s) != h_s(n, k, a, s):
                        bad.append((n, k, a, s))
    secs = time.perf_counter() - t0
    ok = not bad and secs < 60
    verdict(1, ok, f"{cells} cells, {len(bad)} mismatches, {secs:.1f}s")
    assert ok, bad[:10]


def test_02_gnk3_matches_g_s(verdict):
    bad, cells = [], 0
    for k in (10, 12):
        for n in range(k + 1, 21):
            counts = clique_counts(build_gnk3(n, k))
            for s in range(2, 5):
                cells += 1
                if _n_s(counts, s) != g_s(n, k, s):
                    bad.append({"n": n, "k": k, "s": s, "count": _n_s(counts, s),
                                "g_s": g_s(n, k, s)})
    ok = not bad
    verdict(2, ok, f"{cells} cells, {len(bad)} mismatches"
            + (f" (all with n-k+3 odd: {all((b['n'] - b['k'] + 3) % 2 for b in bad)})" if bad else ""))
    assert ok, bad[:6]


def test_03_family_validity(verdict):
    t0 = time.perf_counter()
    rep = run("families", k=list(range(5, 13)), extra_m=1, include_k_family=True)
    # independent recount over the three generators
    bad = []
    graphs = 0
    for k in range(5, 13):
        l = ell(k)
        members = []
        for m in range(k, k + 2):
            for r in range(1, l + 1):
                members += enumerate_family(m, k, r)
                for tag in SPECIAL_TAGS:
                    if tag == "F5" and r != 2:
                        continue
                    members += special_variants(tag, m, k, r)
        for alpha in range(0, max(l - 2, 0) + 1):
            members += [mem for mem in enumerate_k_family(KFamilySpec(k, alpha, k + 1))
                        if mem.descriptor.ftype != "Fell"]
        for mem in members:
            graphs += 1
            d = mem.descriptor
            if (mem.graph.n != d.m or circ(mem.graph) >= k
                    or hamilton_path(mem.graph, d.mask("A"), d.mask("B")) is None):
                bad.append(mem.descriptor.variant)
    secs = time.perf_counter() - t0
    ok = rep.failures == 0 and not bad and secs < 300
    verdict(3, ok, f"suite units={rep.units} failures={rep.failures} skips={rep.skip_reasons}; "
            f"recount {graphs} graphs, {len(bad)} bad; {secs:.0f}s")
    assert ok


def test_04_f_below_h_grid(verdict):
    bad, cells = [], 0
    for k in range(9, 15):
        l = ell(k)
        for n in range(k, k + 21):
            for r in range(1, l - 1):
                for s in range(2, k + 1):
                    for t in range(l - r + 1, l + 1):
                        cells += 1
                        if f_s(n, k, r, s) > h_s(n, k, t, s):
                            bad.append((n, k, r, s, t))
    rep = run("lemma_counts")
    ok = not bad and rep.failures == 0
    verdict(4, ok, f"{cells} grid cells, {len(bad)} violations; suite failures={rep.failures}")
    assert ok


def test_05_posa_guarantee(verdict):
    t0 = time.perf_counter()
    rep = run("posa", n_max=8)
    secs = time.perf_counter() - t0
    ok = rep.failures == 0 and rep.graphs == sum(len(two_connected_graphs(n)) for n in range(3, 9)) \
        and secs < 600
    verdict(5, ok, f"{rep.graphs} graphs, {rep.passes} passes, {rep.failures} failures, {secs:.0f}s")
    assert ok


def test_06_erdos_gallai_and_kopylov_luo(verdict):
    eg = run("erdos_gallai", n_max=9, k=list(range(5, 10)))
    kl = run("kopylov_luo", n_max=9, k=list(range(5, 10)), s=[2, 3, 4])
    counts = (len(two_connected_graphs(4)), len(two_connected_graphs(5)))
    ok = eg.failures == 0 and kl.failures == 0 and counts == (3, 10)
    verdict(6, ok, f"EG failures={eg.failures} ({eg.graphs} graphs), KL failures={kl.failures} "
            f"({kl.graphs} graphs), 2-connected counts n=4,5: {counts}")
    assert ok


def test_07_main_lemma(verdict):
    rep = run("main_lemma", n_max=9, k=[5, 6, 7])
    ok = rep.failures == 0
    verdict(7, ok, f"passes={rep.passes} failures={rep.failures} skips={rep.skip_reasons}")
    assert ok


def test_08_theorem_main(verdict):
    rep = run("theorem_main", n_max=9)
    vac = len(rep.vacuous_cells)
    ok = rep.failures == 0
    verdict(8, ok, f"passes={rep.passes} failures={rep.failures}, "
            f"{vac}/{len(rep.cells)} cells vacuous (flagged in report)")
    assert ok


def test_09_prop_paths(verdict):
    two = run("two_terminal")
    paths = run("prop_paths", k=[10, 12])
    ok = two.failures == 0 and paths.failures == 0
    ces = [f"{c.item} {c.params.get('check')} {c.observed}" for c in paths.counterexamples]
    verdict(9, ok, f"two-terminal failures={two.failures}; per-member failures={paths.failures} "
            f"over {paths.graphs} members" + (f"; first: {ces[0]}" if ces else ""))
    assert ok, ces


def test_10_fan(verdict):
    rep = run("fan", n_max=8, r=[4, 5, 6, 7])
    equality = rep.tags.get("equality", 0)
    literal = rep.tags.get("equality-K_r-union", 0)
    ok = rep.failures == 0 and literal == equality
    verdict(10, ok, f"failures={rep.failures}; equality cases={equality}, with G-ab a union of K_r: "
            f"{literal}, of K_(r-2): {rep.tags.get('equality-K_{r-2}-union', 0)}")
    assert ok


def test_11_conjecture_search(verdict):
    rep = run("conjecture", n_max=8, r=[4, 5, 6], s=[2, 3])
    doc = json.loads(rep.dumps())
    suite = get_suite("conjecture")
    again = run_suite(suite, make_config(suite, doc["config"]))
    same = strip_timing(again.dumps()) == strip_timing(rep.dumps())
    ok = isinstance(doc["counterexamples"], list) and same
    verdict(11, ok, f"{rep.graphs} graphs, {len(doc['counterexamples'])} counterexamples, "
            f"re-run from embedded config identical: {same}")
    assert ok


@pytest.mark.parametrize("suite", ["kopylov_luo", "prop_paths"])
def test_12_determinism(verdict, suite):
    params = {"kopylov_luo": {"n_max": 7}, "prop_paths": {"k": [10]}}[suite]
    a = run(suite, jobs=1, **params).dumps()
    b = run(suite, jobs=1, **params).dumps()
    c = run(suite, jobs=8, **params).dumps()
    ok = strip_timing(a) == strip_timing(b) == strip_timing(c)
    verdict(12, ok, f"{suite}: jobs 1, 1 and 8 byte-identical without timing: {ok}")
    assert ok
