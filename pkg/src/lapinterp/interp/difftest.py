"""Differential testing: direct LAp evaluation against translate-then-evaluate."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..lap.ast import Sequent, free_var_sorts, formula_vars
from ..lap.axioms import axiom_ids, get_axiom
from ..lap.evaluator import LapEvaluator
from ..lap.parser import show
from ..lap.randgen import GenConfig, TermGen, random_env
from ..lap.semantic import random_instance
from ..ring import ring_named
from ..twosorted.evaluator import Evaluator
from .bridge import encode_env
from .translator import TranslationContext, translate
from .vocab import INTERP


@dataclass(frozen=True)
class DiffConfig:
    trials: int = 500
    depth: int = 4
    size_bound: int = 4
    entry_bound: int = 9
    seed: int = 0
    inverse: bool = False  # only meaningful over Z2


@dataclass
class Mismatch:
    text: str
    env: dict
    direct: bool
    translated: bool

    def describe(self) -> str:
        shown = ", ".join(f"{k}={v}" for k, v in sorted(self.env.items()))
        return f"{self.text}: direct={self.direct} translated={self.translated} at {shown}"


@dataclass
class DiffReport:
    ring: str
    trials: int = 0
    true_count: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def describe(self) -> str:
        head = (
            f"{self.ring}: {self.trials} formulas, {self.true_count} true, "
            f"{len(self.mismatches)} mismatches"
        )
        if self.ok:
            return head
        return head + "\n  first: " + self.mismatches[0].describe()


def _sorts(node) -> dict:
    sorts = dict(free_var_sorts(node))
    for name in formula_vars(node):
        sorts[name] = "formula"
    return sorts


class Comparator:
    """Evaluate LAp syntax both ways under one environment."""

    def __init__(self, ring: str):
        self.ring = ring_named(ring)
        self.target = self.ring.name
        self.direct = LapEvaluator(self.ring)
        self.two_sorted = Evaluator(INTERP)

    def both(self, node, env: dict) -> tuple[bool, bool]:
        d = self.direct.sequent(node, env) if isinstance(node, Sequent) else self.direct.formula(node, env)
        phi = translate(node, self.target, TranslationContext(self.target))
        t = self.two_sorted.formula(phi, encode_env(env, _sorts(node), self.target))
        return d, t


def differential_test(ring: str = "z2", config: DiffConfig = DiffConfig()) -> DiffReport:
    """Random formulas up to ``config.depth``; every trial must agree."""
    cmp = Comparator(ring)
    rng = random.Random(f"difftest/{cmp.ring.name}/{config.seed}")
    cfg = GenConfig(
        depth=config.depth,
        size_bound=config.size_bound,
        entry_bound=config.entry_bound,
        inverse=config.inverse and cmp.ring.modulus == 2,
    )
    gen = TermGen(rng, cfg)
    report = DiffReport(cmp.ring.name)
    for _ in range(config.trials):
        phi = gen.formula(rng.randint(1, config.depth))
        env = random_env(_sorts(phi), rng, cmp.ring, config.size_bound, config.entry_bound)
        d, t = cmp.both(phi, env)
        report.trials += 1
        report.true_count += d
        if d != t:
            report.mismatches.append(Mismatch(show(phi), env, d, t))
    return report


@dataclass
class CorpusReport:
    ring: str
    checked: dict = field(default_factory=dict)  # axiom id -> evaluations
    failures: list = field(default_factory=list)  # (axiom id, sequent text, env, direct, translated)

    @property
    def ok(self) -> bool:
        return not self.failures

    def describe(self) -> str:
        total = sum(self.checked.values())
        head = f"{self.ring}: {len(self.checked)} axioms, {total} translated instances"
        if self.ok:
            return head + ", all true"
        ax, text, env, d, t = self.failures[0]
        return head + f", {len(self.failures)} false; first {ax}: {text} (direct={d}, translated={t}) at {env}"


def axiom_corpus(
    ring: str = "z2", instances: int = 10, size_bound: int = 3, seed: int = 0
) -> CorpusReport:
    """Translate every axiom (the bare schema plus random instances) and evaluate.

    Each translation must be true in the two-sorted model under the encoded
    environment, and must agree with direct evaluation.
    """
    cmp = Comparator(ring)
    report = CorpusReport(cmp.ring.name)
    for ax_id in axiom_ids(cmp.ring):
        rng = random.Random(f"corpus/{ax_id}/{cmp.ring.name}/{seed}")
        cfg = GenConfig(depth=3, size_bound=size_bound, inverse=cmp.ring.modulus == 2)
        cases = [get_axiom(ax_id, cmp.ring).sequent]
        cases += [random_instance(ax_id, cmp.ring, rng, cfg) for _ in range(instances)]
        n = 0
        for s in cases:
            for _ in range(2):
                env = random_env(_sorts(s), rng, cmp.ring, size_bound)
                d, t = cmp.both(s, env)
                n += 1
                if not (d and t):
                    report.failures.append((ax_id, show(s), env, d, t))
        report.checked[ax_id] = n
    return report
