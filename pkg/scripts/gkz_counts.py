"""Chamber counts of the TL_n configurations by every available method.

    python scripts/gkz_counts.py --n 3
    python scripts/gkz_counts.py --n 4 --complex-only      # about two minutes
"""

import argparse
import logging
import time

from bircones import gkz


def timed(label, fn):
    t = time.perf_counter()
    value = fn()
    print(f"{label:<42} {value:>6}   ({time.perf_counter() - t:.1f}s)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--complex-only", action="store_true")
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)
    cfg = gkz.tl_configuration(args.n)
    print(f"TL_{args.n}: {len(cfg.vectors)} distinct vectors, {len(gkz.wall_hyperplanes(cfg))} walls")
    if not args.complex_only:
        timed("arrangement, insertion", lambda: gkz.chamber_count(cfg))
        timed("arrangement, insertion (shuffled)", lambda: gkz.chamber_count(cfg, gkz.random_order(cfg, 1)))
        timed("arrangement, flat sum", lambda: gkz.arrangement_region_count(cfg))
    timed("secondary fan on Eff", lambda: gkz.chamber_complex_count(cfg))
    timed("secondary fan inside Mov", lambda: gkz.chamber_complex_count_tl(args.n, movable_only=True))


if __name__ == "__main__":
    main()
