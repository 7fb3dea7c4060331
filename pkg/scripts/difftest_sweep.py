"""Differential test over a grid of formula depths and dimension bounds.

For each ring, depth and size bound this runs the direct and the translated
evaluation on fresh random formulas and reports the mismatch count, the share
of true formulas (a check that the generator is not degenerate) and the time.
"""

import argparse
import time
from dataclasses import dataclass

from lapinterp.interp import DiffConfig, differential_test


@dataclass(frozen=True)
class SweepConfig:
    rings: tuple = ("z2", "z")
    depths: tuple = (1, 2, 3, 4)
    size_bounds: tuple = (1, 2, 4)
    trials: int = 200
    seeds: tuple = (0,)


def sweep(cfg: SweepConfig):
    for ring in cfg.rings:
        for depth in cfg.depths:
            for size in cfg.size_bounds:
                for seed in cfg.seeds:
                    start = time.perf_counter()
                    rep = differential_test(ring, DiffConfig(trials=cfg.trials, depth=depth, size_bound=size, seed=seed))
                    yield ring, depth, size, seed, rep, time.perf_counter() - start


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=SweepConfig.trials)
    ap.add_argument("--seeds", type=int, default=1, help="number of seeds per grid point")
    args = ap.parse_args()
    cfg = SweepConfig(trials=args.trials, seeds=tuple(range(args.seeds)))

    print(f"{'ring':4} {'depth':>5} {'size':>4} {'seed':>4} {'true%':>6} {'mismatch':>8} {'sec':>6}")
    bad = 0
    for ring, depth, size, seed, rep, sec in sweep(cfg):
        bad += len(rep.mismatches)
        share = 100.0 * rep.true_count / max(rep.trials, 1)
        print(f"{ring:4} {depth:>5} {size:>4} {seed:>4} {share:>6.1f} {len(rep.mismatches):>8} {sec:>6.2f}")
        if rep.mismatches:
            print("   ", rep.mismatches[0].describe())
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
