"""Table of ray counts of Eff, Nef, NE and Mov1 against the closed formulas."""

import argparse

from bircones.tl.cones import expected_ray_counts, ray_counts


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    keys = ("eff", "nef", "ne", "mov1")
    print("n  " + "".join(f"{k:>10}" for k in keys))
    for n in range(2, args.max_n + 1):
        got, want = ray_counts(n), expected_ray_counts(n)
        cells = [f"{got[k]}{'' if got[k] == want[k] else '!=' + str(want[k])}" for k in keys]
        print(f"{n:<3}" + "".join(f"{c:>10}" for c in cells))


if __name__ == "__main__":
    main()
