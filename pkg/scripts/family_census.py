"""Count family members per (m, k, r) and per forbidden family K_{k,alpha}; CSV to stdout."""

import argparse
import csv
import sys
from collections import Counter

from egstab.families import KFamilySpec, enumerate_family, k_family_items
from egstab.formulas import ell


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=12)
    args = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["kind", "k", "m_or_alpha", "r_or_item", "count", "types"])
    for k in range(5, args.k_max + 1):
        l = ell(k)
        for m in (k, k + 1):
            for r in range(1, l + 1):
                members = enumerate_family(m, k, r)
                if members:
                    types = Counter(mem.descriptor.special or mem.descriptor.ftype for mem in members)
                    w.writerow(["F", k, m, r, len(members),
                                " ".join(f"{t}:{c}" for t, c in sorted(types.items()))])
        for alpha in range(0, max(l - 2, 0) + 1):
            items = Counter(item for item, _ in k_family_items(KFamilySpec(k, alpha)))
            for item, count in sorted(items.items()):
                w.writerow(["K", k, alpha, item, count, ""])


if __name__ == "__main__":
    main()
