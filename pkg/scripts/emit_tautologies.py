"""Write DIMACS files for every hard identity up to a given size.

Sizes 1 and 2 are also certified here by enumerating the entry variables;
larger instances are left for an external solver.  File names look like
``commute_n3.cnf``.
"""

import argparse
import time
from pathlib import Path

from lapinterp.cnf import IDENTITIES, emit_tautology

CERTIFY_UP_TO = 2


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    status = 0
    for name in IDENTITIES:
        for n in range(1, args.max_n + 1):
            cnf = emit_tautology(name, n)
            path = args.outdir / f"{name}_n{n}.cnf"
            path.write_text(cnf.to_dimacs())
            note = ""
            if n <= CERTIFY_UP_TO:
                start = time.perf_counter()
                model = cnf.find_model()
                verdict = "unsat" if model is None else "sat"
                note = f"  {verdict} by enumeration ({time.perf_counter() - start:.2f}s)"
                # only the deliberately false identity may have a model
                if (model is None) == (name == "corrupt" and n > 1):
                    status = 1
            print(f"{path}: {cnf.num_vars} vars, {len(cnf.clauses)} clauses{note}")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
