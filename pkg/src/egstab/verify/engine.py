"""Suite plumbing: work units, chunked parallel execution and deterministic merging."""

from __future__ import annotations

import multiprocessing
import time
from collections import Counter
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Sequence

from .report import CheckReport, Counterexample

PASS, FAIL, SKIP = "pass", "fail", "skip"
CHUNK = 256


@dataclass(frozen=True)
class Outcome:
    """Result of one (item, parameter point) unit."""
    params: tuple[tuple[str, Any], ...]
    status: str
    reason: str = ""          # skip reason
    observed: Any = None
    expected: Any = None
    claim: str = ""
    tags: tuple[str, ...] = ()


def outcome(params: dict, status: str, **kw) -> Outcome:
    return Outcome(tuple(params.items()), status, **kw)


@dataclass
class Tally:
    counts: Counter = field(default_factory=Counter)       # (params, status) -> count
    reasons: Counter = field(default_factory=Counter)
    cell_tags: Counter = field(default_factory=Counter)    # (params, tag) -> count
    records: list[tuple[int, Counterexample]] = field(default_factory=list)
    items: int = 0

    def add(self, index: int, item_id: str, outs: Sequence[Outcome]) -> None:
        self.items += 1
        for o in outs:
            self.counts[(o.params, o.status)] += 1
            if o.status == SKIP:
                self.reasons[o.reason] += 1
            for t in o.tags:
                self.cell_tags[(o.params, t)] += 1
            if o.status == FAIL:
                self.records.append((index, Counterexample(item_id, dict(o.params), o.observed,
                                                           o.expected, o.claim)))

    def merge(self, other: "Tally") -> None:
        self.counts.update(other.counts)
        self.reasons.update(other.reasons)
        self.cell_tags.update(other.cell_tags)
        self.records.extend(other.records)
        self.items += other.items


class Suite:
    """A family of checks over a list of items (graphs, members or parameter cells).

    Subclasses set ``name``, ``asserting`` and ``config_cls`` and implement
    ``items`` and ``check``.  ``check`` must be a pure function of the item and
    the configuration so that work can be split across processes.
    """
    name = ""
    asserting = True
    config_cls: type = object

    def resolve(self, cfg):
        """Fill in defaults so the embedded config fully determines the run."""
        return cfg

    def items(self, cfg) -> list:
        raise NotImplementedError

    def check(self, item, cfg) -> list[Outcome]:
        raise NotImplementedError

    def item_id(self, item) -> str:
        from ..graph6 import encode
        return encode(item)

    def load_item(self, item_id: str, cfg):
        from ..graph6 import decode
        return decode(item_id)

    def narrow(self, cfg, params: dict):
        """Configuration restricted to one parameter point (used for replay)."""
        return cfg

    def paper_notes(self, cfg) -> list[str]:
        return []

    def observations(self, cfg, tally: Tally) -> dict:
        return {}


# -- parallel map over chunks -------------------------------------------------

_STATE: dict[str, Any] = {}


def _run_chunk(bounds: tuple[int, int]) -> Tally:
    suite, cfg, items = _STATE["suite"], _STATE["cfg"], _STATE["items"]
    return _tally(suite, cfg, items, *bounds)


def _tally(suite: Suite, cfg, items: Sequence, lo: int, hi: int) -> Tally:
    t = Tally()
    for i in range(lo, hi):
        outs = suite.check(items[i], cfg)
        fails = any(o.status == FAIL for o in outs)
        t.add(i, suite.item_id(items[i]) if fails else "", outs)
    return t


def run_items(suite: Suite, cfg, items: Sequence, jobs: int = 1) -> Tally:
    bounds = [(lo, min(lo + CHUNK, len(items))) for lo in range(0, len(items), CHUNK)]
    total = Tally()
    if jobs <= 1 or len(bounds) <= 1:
        for b in bounds:
            total.merge(_tally(suite, cfg, items, *b))
        return total
    _STATE.update(suite=suite, cfg=cfg, items=items)
    try:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            # imap keeps chunk order, so the merge is independent of scheduling
            for part in pool.imap(_run_chunk, bounds):
                total.merge(part)
    finally:
        _STATE.clear()
    return total


# -- report assembly ------------------------------------------------------------

def _cells(tally: Tally) -> list[dict]:
    keys: dict[tuple, dict] = {}
    for (params, status), c in tally.counts.items():
        cell = keys.setdefault(params, {"params": dict(params), "passes": 0, "failures": 0,
                                        "skips": 0, "tags": {}})
        cell[{"pass": "passes", "fail": "failures", "skip": "skips"}[status]] += c
    for (params, tag), c in tally.cell_tags.items():
        keys[params]["tags"][tag] = c
    for cell in keys.values():
        cell["tags"] = dict(sorted(cell["tags"].items()))
    return [keys[p] for p in sorted(keys, key=_param_key)]


def _param_key(params: tuple) -> tuple:
    return tuple((k, (0, v) if isinstance(v, (int, float)) else (1, str(v))) for k, v in params)


def run_suite(suite: Suite, cfg, jobs: int = 1) -> CheckReport:
    start = time.perf_counter()
    cfg = suite.resolve(cfg)
    items = suite.items(cfg)
    tally = run_items(suite, cfg, items, jobs)
    tally.records.sort(key=lambda r: r[0])
    tags: Counter = Counter()
    for (_, tag), c in tally.cell_tags.items():
        tags[tag] += c
    rep = CheckReport(
        suite=suite.name,
        asserting=suite.asserting,
        config={"suite": suite.name, **asdict(cfg)},
        graphs=tally.items,
        skip_reasons=dict(tally.reasons),
        tags=dict(tags),
        cells=_cells(tally),
        counterexamples=[r for _, r in tally.records],
        paper_notes=suite.paper_notes(cfg),
        observations=suite.observations(cfg, tally),
    )
    for (_, status), c in tally.counts.items():
        if status == PASS:
            rep.passes += c
        elif status == FAIL:
            rep.failures += c
        else:
            rep.skips += c
    rep.timing = {"wall_seconds": round(time.perf_counter() - start, 3), "jobs": jobs}
    return rep


def replay(suite: Suite, cfg, record: Counterexample) -> Outcome | None:
    """Re-run the single unit behind a counterexample record."""
    cfg = suite.resolve(cfg)
    narrow = suite.narrow(cfg, record.params)
    item = suite.load_item(record.item, narrow)
    for o in suite.check(item, narrow):
        if dict(o.params) == record.params:
            return o
    return None


def with_fields(cfg, **kw):
    return replace(cfg, **kw)
