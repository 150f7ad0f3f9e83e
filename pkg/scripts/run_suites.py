"""Run every verification suite at its default scale and write one JSON report each."""

import argparse
import sys
import time
from pathlib import Path

from egstab.verify import SUITES, run, write_atomic

# default scale per suite; the graph suites stop at n = 9 (n = 10 needs --deep)
SCALE = {
    "erdos_gallai": {"n_max": 9, "k": list(range(5, 10))},
    "kopylov_luo": {"n_max": 9},
    "main_lemma": {"n_max": 9},
    "theorem_main": {"n_max": 9},
    "prop_paths": {"k": [10, 12]},
    "two_terminal": {},
    "lemma_counts": {},
    "fan": {"n_max": 8, "r": [4, 5, 6, 7]},
    "conjecture": {"n_max": 8, "r": [4, 5, 6], "s": [2, 3]},
    "classify": {"n_max": 9, "k": [7], "s": [2]},
    "corollary": {"n_max": 9},
    "families": {},
    "posa": {"n_max": 8},
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="reports")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--only", nargs="*", choices=sorted(SUITES))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    status = 0
    for name in args.only or sorted(SCALE):
        t0 = time.perf_counter()
        rep = run(name, jobs=args.jobs, **SCALE[name])
        write_atomic(out / f"{name}.json", rep.dumps())
        print(f"{rep.summary_line()}  [{time.perf_counter() - t0:.1f}s]", flush=True)
        if not rep.clean:
            status = 1
    return status


if __name__ == "__main__":
    sys.exit(main())
