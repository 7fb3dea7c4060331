"""Randomized model checking of sequents and of the axiom schemata."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..ring import Ring, ring_named
from .ast import Sequent, contains_inverse, free_var_sorts, formula_vars
from .axioms import axiom_ids, get_axiom, instantiate
from .evaluator import LapEvaluator
from .parser import show
from .randgen import GenConfig, TermGen, random_env


@dataclass
class SemanticReport:
    subject: str
    ring: str
    trials: int = 0
    counterexamples: list = field(default_factory=list)  # (sequent text, env)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def describe(self) -> str:
        if self.ok:
            return f"{self.subject} over {self.ring}: {self.trials} trials, no counterexample"
        seq, env = self.counterexamples[0]
        shown = ", ".join(f"{k}={v}" for k, v in env.items())
        return f"{self.subject} over {self.ring}: counterexample to {seq} at {shown}"


def _ring(ring) -> Ring:
    return ring_named(ring) if isinstance(ring, str) else ring


def _sorts(s) -> dict:
    sorts = dict(free_var_sorts(s))
    for name in formula_vars(s):
        sorts[name] = "formula"
    return sorts


def semantic_check_sequent(
    s: Sequent,
    ring,
    trials: int = 200,
    size_bound: int = 4,
    seed: int = 0,
    entry_bound: int = 9,
    stop_at_first: bool = True,
) -> SemanticReport:
    """Evaluate the sequent on ``trials`` random environments."""
    ring = _ring(ring)
    if ring.modulus is None and contains_inverse(s):
        raise ValueError("the field inverse has no meaning over Z")
    rng = random.Random(seed)
    ev = LapEvaluator(ring)
    sorts = _sorts(s)
    report = SemanticReport(show(s), ring.name)
    for _ in range(trials):
        env = random_env(sorts, rng, ring, size_bound, entry_bound)
        report.trials += 1
        if not ev.sequent(s, env):
            report.counterexamples.append((show(s), env))
            if stop_at_first:
                break
    return report


def random_instance(axiom_id: str, ring, rng: random.Random, cfg: GenConfig, keep: float = 0.4) -> Sequent:
    """Instantiate an axiom with random terms (each metavariable kept with probability ``keep``)."""
    ax = get_axiom(axiom_id, ring)
    gen = TermGen(rng, cfg, avoid=ax.avoid)
    capture_gen = TermGen(rng, cfg)
    subst = {}
    for name, sort in ax.metavariables.items():
        if rng.random() < keep:
            continue
        depth = rng.randint(1, max(cfg.depth - 1, 1))
        if sort == "formula":
            subst[name] = gen.index_formula(depth)
        elif name in ax.capturing:
            subst[name] = capture_gen.term(sort, depth)
        else:
            subst[name] = gen.term(sort, depth)
    return instantiate(ax.id, subst, ring)


def check_axiom(
    axiom_id: str,
    ring,
    trials: int = 500,
    size_bound: int = 4,
    seed: int = 0,
    depth: int = 3,
) -> SemanticReport:
    """Random substitution instances of one axiom, each checked on a random environment."""
    ring = _ring(ring)
    rng = random.Random(f"{axiom_id}/{ring.name}/{seed}")
    cfg = GenConfig(depth=depth, size_bound=size_bound, inverse=ring.modulus == 2)
    ev = LapEvaluator(ring)
    report = SemanticReport(get_axiom(axiom_id, ring).id, ring.name)
    for _ in range(trials):
        s = random_instance(axiom_id, ring, rng, cfg)
        env = random_env(_sorts(s), rng, ring, size_bound)
        report.trials += 1
        if not ev.sequent(s, env):
            report.counterexamples.append((show(s), env))
            break
    return report


def check_all_axioms(ring, trials: int = 500, size_bound: int = 4, seed: int = 0) -> list[SemanticReport]:
    return [check_axiom(a, ring, trials, size_bound, seed) for a in axiom_ids(ring)]
