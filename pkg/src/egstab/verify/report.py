"""Report records and deterministic JSON serialization."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

TIMING_KEY = "timing"


@dataclass(frozen=True)
class Counterexample:
    """A failed (or, for search suites, noteworthy) unit.

    ``item`` identifies the input: a graph6 string for graph suites, a member
    id for family suites, empty for pure formula checks.
    """
    item: str
    params: dict[str, Any]
    observed: Any
    expected: Any
    claim: str

    def to_json(self) -> dict:
        return {"item": self.item, "params": self.params, "observed": jsonable(self.observed),
                "expected": jsonable(self.expected), "claim": self.claim}


@dataclass
class CheckReport:
    suite: str
    asserting: bool
    config: dict[str, Any]
    graphs: int = 0
    passes: int = 0
    failures: int = 0
    skips: int = 0
    skip_reasons: dict[str, int] = field(default_factory=dict)
    tags: dict[str, int] = field(default_factory=dict)
    cells: list[dict] = field(default_factory=list)
    counterexamples: list[Counterexample] = field(default_factory=list)
    paper_notes: list[str] = field(default_factory=list)
    observations: dict[str, Any] = field(default_factory=dict)
    timing: dict[str, Any] = field(default_factory=dict)

    @property
    def units(self) -> int:
        return self.passes + self.failures + self.skips

    @property
    def clean(self) -> bool:
        """True unless an asserting suite recorded a failure."""
        return not (self.asserting and self.failures)

    @property
    def vacuous_cells(self) -> list[dict]:
        return [c["params"] for c in self.cells if c["passes"] + c["failures"] == 0]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "asserting": self.asserting,
            "config": jsonable(self.config),
            "counts": {"graphs": self.graphs, "units": self.units, "passes": self.passes,
                       "failures": self.failures, "skips": self.skips},
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
            "tags": dict(sorted(self.tags.items())),
            "cells": jsonable(self.cells),
            "vacuous_cells": jsonable(self.vacuous_cells),
            "counterexamples": [c.to_json() for c in self.counterexamples],
            "paper_notes": list(self.paper_notes),
            "observations": jsonable(self.observations),
            TIMING_KEY: jsonable(self.timing),
        }

    def dumps(self, with_timing: bool = True) -> str:
        doc = self.to_json()
        if not with_timing:
            doc.pop(TIMING_KEY)
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def summary_line(self) -> str:
        status = "clean" if self.clean else "COUNTEREXAMPLE"
        return (f"{self.suite}: {status} units={self.units} passes={self.passes} "
                f"failures={self.failures} skips={self.skips} graphs={self.graphs}")


def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "__dataclass_fields__"):
        return jsonable(asdict(x))
    return x


def strip_timing(text: str) -> str:
    """Report JSON with the timing block removed, for determinism comparisons."""
    doc = json.loads(text)
    doc.pop(TIMING_KEY, None)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_atomic(path: str | Path, text: str) -> None:
    """Write via a temporary file in the same directory and rename over the target."""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def load_report(path: str | Path) -> dict:
    with open(path) as fh:
        return json.load(fh)
