"""The fifteen 2-BASIC axioms, checked in the standard model.

Each axiom is a formula over L2_A with free variables.  :func:`check_basic_axioms`
instantiates the number variables with every value up to ``range_`` (all
combinations for two-variable axioms) and the string variables with a random
sample, and reports every instance that evaluates false.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from ..bitstring import BitString
from .ast import free_vars, is_string_var
from .evaluator import Evaluator
from .sexpr import parse_formula
from .vocab import BASE

BASIC_AXIOMS: dict[str, str] = {
    "B1": "(not (= (+ x 1) 0))",
    "B2": "(-> (= (+ x 1) (+ y 1)) (= x y))",
    "B3": "(= (+ x 0) x)",
    "B4": "(= (+ x (+ y 1)) (+ (+ x y) 1))",
    "B5": "(= (* x 0) 0)",
    "B6": "(= (* x (+ y 1)) (+ (* x y) x))",
    "B7": "(-> (and (<= x y) (<= y x)) (= x y))",
    "B8": "(<= x (+ x y))",
    "B9": "(<= 0 x)",
    "B10": "(or (<= x y) (<= y x))",
    "B11": "(<-> (<= x y) (< x (+ y 1)))",
    "B12": "(-> (not (= x 0)) (exists (y <= x) (= (+ y 1) x)))",
    "L1": "(-> (in X y) (< y (len X)))",
    "L2": "(-> (= (+ y 1) (len X)) (in X y))",
    "SE": "(-> (and (= (len X) (len Y)) (forall (i < (len X)) (<-> (in X i) (in Y i)))) (=2 X Y))",
}


@dataclass
class AxiomReport:
    checked: dict = field(default_factory=dict)  # axiom -> instance count
    counterexamples: list = field(default_factory=list)  # (axiom, env)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _string_pool(rng: random.Random, count: int, width: int) -> list[BitString]:
    pool = [BitString(), BitString.parse("{0,2}"), BitString.parse("{4}")]
    while len(pool) < count:
        pool.append(BitString(rng.getrandbits(rng.randint(1, width))))
    # add same-length twins so that SE's hypothesis is sometimes true
    pool.extend(list(pool[: count // 4]))
    return pool


def check_basic_axioms(
    range_: int = 20, strings: int = 24, width: int = 12, seed: int = 0
) -> AxiomReport:
    rng = random.Random(seed)
    ev = Evaluator(BASE)
    pool = _string_pool(rng, strings, width)
    report = AxiomReport()
    for name, text in BASIC_AXIOMS.items():
        phi = parse_formula(text, BASE)
        names = sorted(free_vars(phi))
        domains = [pool if is_string_var(v) else range(range_ + 1) for v in names]
        n = 0
        for values in itertools.product(*domains):
            env = dict(zip(names, values))
            n += 1
            if not ev.formula(phi, env):
                report.counterexamples.append((name, env))
        report.checked[name] = n
    return report
