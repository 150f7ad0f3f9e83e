"""Command line interface: egstab {gen,formulas,solve,verify,enumerate,report}.

Machine-readable output (graph6, CSV, JSON) goes to stdout or --out; human
messages go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

from . import formulas
from .cliques import clique_counts
from .cycles import circumference
from .enumeration import connected_graphs, two_connected_graphs
from .errors import EgstabError, InvalidParameters
from .families import (KFamilySpec, Member, build_gnk3, build_h, build_special, build_z,
                       enumerate_family, enumerate_k_family, f_ell_member, member_id,
                       special_variants)
from .graph import Graph, bits
from .graph6 import decode, encode, read_file
from .posa import greedy_maximal_paths, posa_cycle
from .structure import disintegration
from .subgraph import contains_subgraph
from .verify import SUITES, get_suite, make_config, replay, run_suite
from .verify.report import Counterexample, load_report, write_atomic

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INTERNAL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 64, 74


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    grid: dict[str, Any] = field(default_factory=dict)
    input: str | None = None
    output: str | None = None
    jobs: int = 1
    deep: bool = False
    seed: int = 0


def parse_ints(text: str) -> list[int]:
    """'3', '3..7' (inclusive) or comma-separated mixes like '2,4..6'."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo_i, hi_i + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"not an integer list or range: {text!r}")
    if not out:
        raise UsageError("empty list")
    return out


def parse_int(text: str) -> int:
    vals = parse_ints(text)
    if len(vals) != 1:
        raise UsageError(f"expected a single integer, got {text!r}")
    return vals[0]


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# gen

def _gen(args) -> int:
    fam = args.family
    need = lambda name: _need(args, name)
    members: list[Member] = []
    graphs: list[Graph] = []
    if fam == "h":
        graphs = [build_h(need("n"), need("k"), need("a"))]
    elif fam == "z":
        graphs = [build_z(need("n"), need("k"), need("delta"))]
    elif fam == "fell":
        members = [f_ell_member(need("l"))]
    elif fam == "gnk3":
        graphs = [build_gnk3(need("n"), need("k"))]
    elif fam in ("F0", "F1", "F2", "F3", "F4", "F5"):
        if args.variant is None:
            members = special_variants(fam, need("m"), need("k"), need("r"))
            if not members:
                raise InvalidParameters(f"no {fam} graph for these parameters")
        else:
            members = [build_special(fam, need("m"), need("k"), need("r"), args.variant)]
    elif fam in ("type1", "type2", "type3", "type4"):
        t = {"type1": "I", "type2": "II", "type3": "III", "type4": "IV"}[fam]
        members = [mem for mem in enumerate_family(need("m"), need("k"), need("r"))
                   if mem.descriptor.ftype == t]
    elif fam == "kfam":
        members = enumerate_k_family(KFamilySpec(need("k"), need("alpha"), args.m_max))
    graphs += [mem.graph for mem in members]
    _emit("".join(encode(g) + "\n" for g in graphs), args.out)
    if members:
        desc = "\n".join(f"id={member_id(mem)}\n" + mem.descriptor.record() for mem in members)
        if args.out:
            write_atomic(args.out + ".desc", desc)
        elif args.desc:
            write_atomic(args.desc, desc)
    if args.desc and not members:
        write_atomic(args.desc, "")
    print(f"{len(graphs)} graph(s)", file=sys.stderr)
    return EXIT_OK


def _need(args, name: str) -> int:
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this family")
    return parse_int(val) if isinstance(val, str) else val


# ---------------------------------------------------------------------------
# formulas

TABLES = {
    "h_s": (("n", "k", "a", "s"), formulas.h_s),
    "f_s": (("n", "k", "r", "s"), formulas.f_s),
    "g_s": (("n", "k", "s"), formulas.g_s),
    "luo": (("n", "k", "s"), formulas.luo_bound),
    "eg": (("k", "n"), formulas.eg_bound),
    "fan": (("r", "n"), formulas.fan_bound),
    "conjecture": (("n", "r", "s"), formulas.conjecture_bound),
}


def _formulas(args) -> int:
    names, fn = TABLES[args.table]
    grids = []
    for name in names:
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"table {args.table} needs --{name}")
        grids.append(parse_ints(val))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(names) + [args.table])
    skipped = 0
    # vary the first listed parameter fastest for readability: loop order as given
    for combo in itertools.product(*grids):
        try:
            value = fn(*combo)
        except formulas.OutOfDomain:
            skipped += 1
            continue
        w.writerow(list(combo) + [str(value)])
    _emit(buf.getvalue(), args.out)
    if skipped:
        print(f"{skipped} cell(s) outside the formula's domain were skipped", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# solve

def _solve_one(op: str, g: Graph, args, pattern: Graph | None) -> tuple[Any, Any]:
    if op == "circ":
        found = circumference(g)
        return (0, None) if found is None else (found[0], found[1])
    if op == "cliques":
        counts = clique_counts(g)
        return {"counts": counts, "omega": len(counts) - 1}, None
    if op == "disint":
        alpha = _need(args, "alpha")
        return sorted(bits(disintegration(g, alpha))), None
    if op == "posa":
        if args.path:
            path = parse_ints(args.path)
        else:
            path = next(greedy_maximal_paths(g), None)
            if path is None:
                raise InvalidParameters("graph has no edge")
        res = posa_cycle(g, path)
        return {"length": res.length, "target": res.target, "method": res.method,
                "path": path}, res.cycle
    if op == "subiso":
        emb = contains_subgraph(g, pattern)
        return emb is not None, None if emb is None else {str(k): v for k, v in sorted(emb.items())}
    raise UsageError(f"unknown op {op}")


def _solve(args) -> int:
    if not args.input:
        raise UsageError("solve needs --in")
    pattern = None
    if args.op == "subiso":
        if not args.pattern:
            raise UsageError("subiso needs --pattern (graph6 string)")
        pattern = decode(args.pattern)
    lines = []
    for idx, g in enumerate(read_file(args.input)):
        t0 = time.perf_counter()
        result, witness = _solve_one(args.op, g, args, pattern)
        us = int((time.perf_counter() - t0) * 1e6)
        lines.append(json.dumps({"index": idx, "result": result, "witness": witness,
                                 "microseconds": us}, sort_keys=True))
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

_GRID_FLAGS = ("n_max", "n_min", "k", "alpha", "beta", "s", "r", "delta")


def _suite_values(args, suite) -> dict:
    values: dict[str, Any] = {}
    if args.config:
        doc = load_report(args.config)
        cfg = doc.get("config", doc)
        if cfg.get("suite", suite.name) != suite.name:
            raise UsageError(f"config is for suite {cfg['suite']!r}, not {suite.name!r}")
        values.update({k: v for k, v in cfg.items() if k != "suite"})
    for name in _GRID_FLAGS:
        val = getattr(args, name, None)
        if val is None:
            continue
        values[name] = parse_int(val) if name in ("n_max", "n_min") else parse_ints(val)
    if args.deep:
        values["deep"] = True
    if args.seed is not None:
        values["seed"] = args.seed
    return values


def _verify(args) -> int:
    name = args.suite
    if name is None and args.config:
        name = load_report(args.config).get("config", {}).get("suite")
    if name is None:
        raise UsageError("--suite is required")
    suite = get_suite(name)
    values = _suite_values(args, suite)
    cfg = make_config(suite, values)
    seed = values.get("seed", 0)
    run = RunConfig("verify", asdict(suite.resolve(cfg)), args.config, args.out, args.jobs,
                    values.get("deep", False), seed)
    report = run_suite(suite, cfg, jobs=run.jobs)
    report.config.setdefault("seed", run.seed)
    if args.format == "csv":
        text = _cells_csv(report.to_json())
    elif args.format == "graph6":
        text = _counterexample_graphs(suite, cfg, report)
    else:
        text = report.dumps()
    _emit(text, args.out)
    print(report.summary_line(), file=sys.stderr)
    return EXIT_OK if report.clean else EXIT_COUNTEREXAMPLE


def _counterexample_graphs(suite, cfg, report) -> str:
    """graph6 lines for the distinct inputs behind the counterexample records."""
    lines: list[str] = []
    cfg = suite.resolve(cfg)
    for ce in report.counterexamples:
        if not ce.item:
            continue
        item = suite.load_item(ce.item, cfg)
        g = item.graph if isinstance(item, Member) else item
        if isinstance(g, Graph):
            line = encode(g)
            if line not in lines:
                lines.append(line)
    return "".join(line + "\n" for line in lines)


def _cells_csv(doc: dict) -> str:
    keys: list[str] = []
    for cell in doc["cells"]:
        for k in cell["params"]:
            if k not in keys:
                keys.append(k)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(keys + ["passes", "failures", "skips"])
    for cell in doc["cells"]:
        w.writerow([cell["params"].get(k, "") for k in keys]
                   + [cell["passes"], cell["failures"], cell["skips"]])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# enumerate / report

def _enumerate(args) -> int:
    n = parse_int(_need_str(args, "n"))
    fn = two_connected_graphs if args.two_connected else connected_graphs
    graphs = fn(n, allow_large=args.deep)
    if args.count:
        _emit(f"{len(graphs)}\n", args.out)
    else:
        _emit("".join(encode(g) + "\n" for g in graphs), args.out)
    return EXIT_OK


def _need_str(args, name: str) -> str:
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name} is required")
    return val


def _report(args) -> int:
    if not args.input:
        raise UsageError("report needs --in")
    doc = load_report(args.input)
    if args.format == "csv":
        _emit(_cells_csv(doc), args.out)
    else:
        c = doc["counts"]
        lines = [f"suite={doc['suite']} asserting={doc['asserting']} units={c['units']} "
                 f"passes={c['passes']} failures={c['failures']} skips={c['skips']}"]
        lines += [f"note: {n}" for n in doc.get("paper_notes", [])]
        lines += [f"vacuous cells: {len(doc.get('vacuous_cells', []))}"]
        _emit("\n".join(lines) + "\n", args.out)
    status = EXIT_OK
    if args.replay and doc["counterexamples"]:
        suite = get_suite(doc["suite"])
        cfg = make_config(suite, {k: v for k, v in doc["config"].items()})
        for rec in doc["counterexamples"]:
            ce = Counterexample(rec["item"], rec["params"], rec["observed"], rec["expected"],
                                rec["claim"])
            o = replay(suite, cfg, ce)
            ok = o is not None and o.status == "fail"
            print(f"replay {rec['item']} {rec['params']}: {'reproduced' if ok else 'NOT reproduced'}",
                  file=sys.stderr)
            if not ok:
                status = EXIT_INTERNAL
    if doc["asserting"] and doc["counts"]["failures"] and status == EXIT_OK:
        status = EXIT_COUNTEREXAMPLE
    return status


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="egstab", description="Circumference and clique-count stability toolkit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    g = sub.add_parser("gen", help="build a named graph or family")
    g.add_argument("--family", required=True,
                   choices=["h", "z", "fell", "gnk3", "F0", "F1", "F2", "F3", "F4", "F5",
                            "type1", "type2", "type3", "type4", "kfam"])
    for name in ("n", "k", "a", "delta", "m", "r", "l", "alpha"):
        g.add_argument(f"--{name}")
    g.add_argument("--m-max", dest="m_max", type=int)
    g.add_argument("--variant", type=int)
    g.add_argument("--out")
    g.add_argument("--desc", help="sidecar descriptor path when writing to stdout")

    f = sub.add_parser("formulas", help="tabulate a closed-form count as CSV")
    f.add_argument("--table", required=True, choices=sorted(TABLES))
    for name in ("n", "k", "a", "r", "s"):
        f.add_argument(f"--{name}")
    f.add_argument("--n-range", dest="n")
    f.add_argument("--out")

    s = sub.add_parser("solve", help="run a solver on each graph of a graph6 file")
    s.add_argument("--op", required=True, choices=["circ", "cliques", "disint", "posa", "subiso"])
    s.add_argument("--in", dest="input")
    s.add_argument("--alpha", type=int)
    s.add_argument("--path", help="comma-separated path for --op posa")
    s.add_argument("--pattern", help="graph6 pattern for --op subiso")
    s.add_argument("--out")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=sorted(SUITES))
    v.add_argument("--n-max", dest="n_max")
    v.add_argument("--n-min", dest="n_min")
    for name in ("k", "alpha", "beta", "s", "r", "delta"):
        v.add_argument(f"--{name}")
    v.add_argument("--deep", action="store_true", help="allow n = 10 enumeration")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int)
    v.add_argument("--config", help="JSON config or a previous report to re-run")
    v.add_argument("--format", choices=["json", "csv", "graph6"], default="json")
    v.add_argument("--out")

    e = sub.add_parser("enumerate", help="list non-isomorphic connected graphs as graph6")
    e.add_argument("--n", required=True)
    e.add_argument("--two-connected", action="store_true")
    e.add_argument("--count", action="store_true")
    e.add_argument("--deep", action="store_true")
    e.add_argument("--out")

    r = sub.add_parser("report", help="summarize (and optionally replay) a report")
    r.add_argument("--in", dest="input")
    r.add_argument("--format", choices=["text", "csv"], default="text")
    r.add_argument("--replay", action="store_true")
    r.add_argument("--out")
    return p


HANDLERS = {"gen": _gen, "formulas": _formulas, "solve": _solve, "verify": _verify,
            "enumerate": _enumerate, "report": _report}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        return HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EgstabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except Exception as exc:  # noqa: BLE001 - contract: internal errors exit 2
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
