"""Signatures and rotation numbers found for several bounce counts.

    python scripts/orbit_patterns.py --p 3.0 --seeds 2000 --bounces 2 3 4 5 7
"""
import argparse
from collections import Counter

from lpbilliards import BoundarySpec, RunConfig, run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=float, default=3.0)
    ap.add_argument("--seeds", type=int, default=2000)
    ap.add_argument("--bounces", type=int, nargs="+", default=[2, 3, 4, 5, 7])
    ap.add_argument("--rng-seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'N':>3}  {'orbits':>6}  signatures / rotations")
    for n in args.bounces:
        rep = run(RunConfig(BoundarySpec(args.p), n, args.seeds, rng_seed=args.rng_seed))
        sigs = Counter(str(r.signature) for r in rep.records)
        rots = Counter(str(r.rotation) for r in rep.records)
        print(f"{n:>3}  {len(rep.records):>6}  {dict(sorted(sigs.items()))}")
        print(f"{'':>13}{dict(sorted(rots.items()))}")
        if rep.failures:
            print(f"{'':>13}failures {dict(rep.failures)}")


if __name__ == "__main__":
    main()
