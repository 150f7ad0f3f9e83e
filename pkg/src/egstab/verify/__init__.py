"""Theorem-suite harness: exhaustive and grid checks with JSON reports."""

from __future__ import annotations

from dataclasses import fields

from ..errors import InvalidParameters
from .classical import (ConjectureConfig, ConjectureSearch, ErdosGallai, ErdosGallaiConfig, Fan,
                        FanConfig, KopylovLuo, KopylovLuoConfig)
from .engine import Outcome, Suite, replay, run_suite
from .members import (FamilyValidity, FamilyValidityConfig, LemmaCounts, LemmaCountsConfig,
                      PosaConfig, PosaSweep, PropPaths, PropPathsConfig, TwoTerminal,
                      TwoTerminalConfig)
from .report import CheckReport, Counterexample, load_report, strip_timing, write_atomic
from .structural import (Classify, ClassifyConfig, Corollary, CorollaryConfig, MainLemma,
                         MainLemmaConfig, TheoremMain, TheoremMainConfig)

SUITES: dict[str, Suite] = {s.name: s for s in (
    ErdosGallai(), KopylovLuo(), MainLemma(), TheoremMain(), PropPaths(), TwoTerminal(),
    LemmaCounts(), Fan(), ConjectureSearch(), Classify(), Corollary(), FamilyValidity(),
    PosaSweep(),
)}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise InvalidParameters(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")


def make_config(suite: Suite, values: dict):
    """Suite config from a dict; keys that are not config fields are rejected
    (``suite`` and ``seed`` are accepted and ignored when the suite has no seed)."""
    names = {f.name for f in fields(suite.config_cls)}
    unknown = set(values) - names - {"suite", "seed"}
    if unknown:
        raise InvalidParameters(f"suite {suite.name} does not take {', '.join(sorted(unknown))}")
    return suite.config_cls(**{k: v for k, v in values.items() if k in names})


def run(name: str, jobs: int = 1, **params) -> CheckReport:
    suite = get_suite(name)
    return run_suite(suite, make_config(suite, params), jobs)


def check_erdos_gallai(n_max: int = 9, k_range=None, jobs: int = 1) -> CheckReport:
    return run("erdos_gallai", jobs, n_max=n_max, k=k_range)


def check_kopylov_luo(n_max: int = 9, k_range=None, s_range=None, jobs: int = 1) -> CheckReport:
    return run("kopylov_luo", jobs, n_max=n_max, k=k_range, s=s_range)


def check_main_lemma(n_max: int = 9, k=None, jobs: int = 1) -> CheckReport:
    return run("main_lemma", jobs, n_max=n_max, k=k)


def check_theorem_main(n_max: int = 9, k=None, alpha=None, beta=None, s=None,
                       jobs: int = 1) -> CheckReport:
    return run("theorem_main", jobs, n_max=n_max, k=k, alpha=alpha, beta=beta, s=s)


def check_prop_paths(k_range=None, extra_m: int = 1, seed: int = 0, jobs: int = 1) -> CheckReport:
    return run("prop_paths", jobs, k=k_range, extra_m=extra_m, seed=seed)


def check_lemma_counts(k_range=None, n_extra: int = 20, s_range=None, seed: int = 0,
                       jobs: int = 1) -> CheckReport:
    return run("lemma_counts", jobs, k=k_range, n_extra=n_extra, s=s_range, seed=seed)


def check_fan(n_max: int = 8, r_range=None, jobs: int = 1) -> CheckReport:
    return run("fan", jobs, n_max=n_max, r=r_range)


def search_conjecture(n_max: int = 8, r_range=None, s_range=None, jobs: int = 1) -> CheckReport:
    return run("conjecture", jobs, n_max=n_max, r=r_range, s=s_range)


def classify_theorem_1_1(n_max: int = 9, k=None, s=None, jobs: int = 1) -> CheckReport:
    return run("classify", jobs, n_max=n_max, k=k, s=s)


def check_corollary_structures(n_max: int = 9, k=None, delta=None, s=None,
                               jobs: int = 1) -> CheckReport:
    return run("corollary", jobs, n_max=n_max, k=k, delta=delta, s=s)


__all__ = [
    "SUITES", "CheckReport", "Counterexample", "Outcome", "Suite", "get_suite", "make_config",
    "run", "run_suite", "replay", "load_report", "strip_timing", "write_atomic",
    "check_erdos_gallai", "check_kopylov_luo", "check_main_lemma", "check_theorem_main",
    "check_prop_paths", "check_lemma_counts", "check_fan", "search_conjecture",
    "classify_theorem_1_1", "check_corollary_structures",
    "ErdosGallaiConfig", "KopylovLuoConfig", "MainLemmaConfig", "TheoremMainConfig",
    "PropPathsConfig", "TwoTerminalConfig", "LemmaCountsConfig", "FanConfig", "ConjectureConfig",
    "ClassifyConfig", "CorollaryConfig", "FamilyValidityConfig", "PosaConfig",
]
