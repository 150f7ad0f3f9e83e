"""Fill the enumeration cache (connected and 2-connected classes) up to --n-max."""

import argparse
import time

from egstab.enumeration import cache_dir, connected_graphs, two_connected_graphs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--deep", action="store_true", help="allow n = 10")
    args = ap.parse_args()
    print(f"cache: {cache_dir()}")
    for n in range(1, args.n_max + 1):
        t0 = time.perf_counter()
        conn = connected_graphs(n, allow_large=args.deep)
        two = two_connected_graphs(n, allow_large=args.deep)
        print(f"n={n}: connected={len(conn)} two-connected={len(two)} "
              f"[{time.perf_counter() - t0:.1f}s]", flush=True)


if __name__ == "__main__":
    main()
