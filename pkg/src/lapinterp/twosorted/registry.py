"""Named function and predicate symbols with executable semantics.

A :class:`Symbol` pairs a Python implementation with an optional defining
formula in the S-expression syntax.  Three definition styles exist:

``bits``
    string functions: a formula in the parameters plus the bit index ``b``
    that holds exactly at the set bits of the output.
``graph``
    number functions: a formula in the parameters plus ``v`` that holds
    exactly when ``v`` is the output.  String functions may also use a graph
    over ``Out`` (the Sigma-B-1 style of the powering functions).
``formula``
    predicates: a formula in the parameters equivalent to the predicate.

:func:`spot_check` compares implementation and definition on random inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..bitstring import BitString
from .ast import is_string_var


class UnknownSymbol(KeyError):
    pass


@dataclass(frozen=True)
class Symbol:
    name: str
    kind: str  # 'num' | 'str' | 'pred'
    params: tuple  # parameter names: lowercase for numbers, uppercase for strings
    impl: Callable
    definition: Optional[str] = None
    style: Optional[str] = None  # 'bits' | 'graph' | 'formula'
    sample: Optional[Callable[[random.Random], tuple]] = field(default=None, compare=False)
    note: str = ""

    @property
    def arity(self) -> tuple[int, int]:
        nn = sum(1 for p in self.params if not is_string_var(p))
        return nn, len(self.params) - nn

    def __post_init__(self):
        if self.kind not in ("num", "str", "pred"):
            raise ValueError(f"bad symbol kind {self.kind!r}")
        seen_string = False
        for p in self.params:
            if is_string_var(p):
                seen_string = True
            elif seen_string:
                raise ValueError(f"{self.name}: number parameters must precede strings")
        if self.definition is not None and self.style is None:
            default = {"num": "graph", "str": "bits", "pred": "formula"}[self.kind]
            object.__setattr__(self, "style", default)


class Registry:
    """A mapping from names to symbols.  ``freeze()`` stops further changes."""

    def __init__(self, symbols=()):
        self._symbols: dict[str, Symbol] = {}
        self._frozen = False
        for s in symbols:
            self.add(s)

    def add(self, sym: Symbol) -> Symbol:
        if self._frozen:
            raise RuntimeError("registry is frozen")
        if sym.name in self._symbols:
            raise ValueError(f"symbol {sym.name!r} registered twice")
        self._symbols[sym.name] = sym
        return sym

    def define(self, name, kind, params, impl, definition=None, **kw) -> Symbol:
        return self.add(Symbol(name, kind, tuple(params), impl, definition, **kw))

    def extend(self) -> "Registry":
        """An unfrozen copy that can take more symbols."""
        return Registry(self._symbols.values())

    def freeze(self) -> "Registry":
        self._frozen = True
        return self

    def get(self, name: str) -> Optional[Symbol]:
        return self._symbols.get(name)

    def require(self, name: str) -> Symbol:
        sym = self._symbols.get(name)
        if sym is None:
            raise UnknownSymbol(name)
        return sym

    def __contains__(self, name) -> bool:
        return name in self._symbols

    def __iter__(self):
        return iter(self._symbols.values())

    def __len__(self) -> int:
        return len(self._symbols)


# -- spot checks -----------------------------------------------------------------


@dataclass
class SpotResult:
    name: str
    samples: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def default_sample(sym: Symbol, rng: random.Random) -> tuple:
    out = []
    for p in sym.params:
        if is_string_var(p):
            out.append(BitString(rng.getrandbits(rng.randint(0, 24))))
        else:
            out.append(rng.randint(0, 12))
    return tuple(out)


def spot_check(
    registry: Registry,
    name: str,
    samples: int = 100,
    seed: int = 0,
    slack: int = 4,
) -> SpotResult:
    """Compare ``impl`` against the defining formula on random arguments.

    For ``bits`` definitions every bit below ``|output| + slack`` is checked,
    so a definition that sets stray high bits is caught too.  Number graphs
    are checked at the output and at output + 1 (a cheap uniqueness probe).
    """
    from .evaluator import Evaluator
    from .sexpr import parse_formula

    sym = registry.require(name)
    if sym.definition is None:
        raise ValueError(f"{name} has no defining formula")
    phi = parse_formula(sym.definition, registry)
    ev = Evaluator(registry)
    rng = random.Random(seed)
    gen = sym.sample or (lambda r: default_sample(sym, r))
    failures = []
    for _ in range(samples):
        args = gen(rng)
        env = dict(zip(sym.params, args))
        out = sym.impl(*args)
        if sym.style == "bits":
            top = len(out) + slack
            for b in range(top):
                env["b"] = b
                if ev.formula(phi, env) != out[b]:
                    failures.append((args, f"bit {b}: impl={out[b]}"))
                    break
        elif sym.style == "graph" and sym.kind == "num":
            env["v"] = out
            if not ev.formula(phi, env):
                failures.append((args, f"graph rejects the value {out}"))
                continue
            env["v"] = out + 1
            if ev.formula(phi, env):
                failures.append((args, f"graph also accepts {out + 1}"))
        elif sym.style == "graph":
            env["Out"] = out
            if not ev.formula(phi, env):
                failures.append((args, "graph rejects the output string"))
                continue
            for t in range(min(len(out) + slack, 64)):
                env["Out"] = out.flip(t)
                if ev.formula(phi, env):
                    failures.append((args, f"graph accepts output with bit {t} flipped"))
                    break
        else:
            if ev.formula(phi, env) != bool(out):
                failures.append((args, f"formula disagrees (impl={bool(out)})"))
    return SpotResult(name, samples, failures)


def spot_check_all(registry: Registry, samples: int = 100, seed: int = 0) -> list[SpotResult]:
    return [
        spot_check(registry, s.name, samples=samples, seed=seed + i)
        for i, s in enumerate(registry)
        if s.definition is not None
    ]
