"""Run the acceptance criteria outside pytest and print one verdict per line.

    python scripts/acceptance_report.py                 # all nine
    python scripts/acceptance_report.py 4 5 --seed 3    # a subset, another seed
    python scripts/acceptance_report.py --json out.json

Exit status is 0 when every selected criterion passes.
"""

import argparse
import json
import sys
from dataclasses import replace

from lapinterp.acceptance import CRITERIA, run
from lapinterp.config import AcceptanceConfig


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("criteria", nargs="*", type=int, default=sorted(CRITERIA))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", help="also write the outcomes to this file")
    args = ap.parse_args()

    cfg = replace(AcceptanceConfig(), seed=args.seed)
    outcomes = [run(n, cfg) for n in args.criteria]
    for o in outcomes:
        print(o.line())
    if args.json:
        payload = {
            "config": cfg.as_dict(),
            "outcomes": [
                {"criterion": o.number, "ok": o.ok, "seconds": round(o.seconds, 3), "failures": o.failures[:20]}
                for o in outcomes
            ],
        }
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
    return 0 if all(o.ok for o in outcomes) else 1


if __name__ == "__main__":
    sys.exit(main())
