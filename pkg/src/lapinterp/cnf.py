"""Propositional encodings of the hard matrix identities over Z2.

The entries of the n x n matrices A, B (and C where needed) are propositional
variables.  A product entry ``(XY)[i][j]`` is the exclusive or of the
conjunctions ``X[i][k] & Y[k][j]``.  Each conjunction and each step of the
exclusive-or chain gets an auxiliary variable defined by the usual
equivalence clauses (Tseitin's encoding).  The instance states the
hypotheses as unit clauses and the negated conclusion as one wide clause, so
it is unsatisfiable exactly when the identity is a tautology at size n.

Variable numbering is deterministic: matrix entries first (A, then B, then
C, row-major), then auxiliaries in order of creation.  The same identity and
size always produce the same DIMACS text.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

IDENTITIES = {
    "inverse-unique": "AB=I, AC=I -> B=C",
    "zero-divisor": "AB=I, AC=0 -> C=0",
    "commute": "AB=I -> BA=I",
    "transpose": "AB=I -> At Bt=I",
    # a false statement, for checking that the pipeline can say "satisfiable"
    "corrupt": "AB=I -> A=B",
}


@dataclass
class CnfInstance:
    num_vars: int = 0
    clauses: list = field(default_factory=list)
    names: dict = field(default_factory=dict)  # var -> name, for matrix entries
    primary: list = field(default_factory=list)  # entry variables, in order
    gates: list = field(default_factory=list)  # (out, op, a, b) with op 'and' | 'xor'
    description: str = ""

    def var(self, name: str | None = None) -> int:
        self.num_vars += 1
        if name is not None:
            self.names[self.num_vars] = name
            self.primary.append(self.num_vars)
        return self.num_vars

    def add(self, *lits: int) -> None:
        self.clauses.append(tuple(lits))

    def gate_and(self, a: int, b: int) -> int:
        g = self.var()
        self.add(-g, a)
        self.add(-g, b)
        self.add(g, -a, -b)
        self.gates.append((g, "and", a, b))
        return g

    def gate_xor(self, a: int, b: int) -> int:
        g = self.var()
        self.add(-g, a, b)
        self.add(-g, -a, -b)
        self.add(g, -a, b)
        self.add(g, a, -b)
        self.gates.append((g, "xor", a, b))
        return g

    def to_dimacs(self) -> str:
        lines = [f"c {self.description}"] if self.description else []
        lines += [f"c var {v} {name}" for v, name in sorted(self.names.items())]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"

    # -- exhaustive certification --------------------------------------------------------

    def assignment(self, bits) -> dict:
        """Extend values of the entry variables through the gate definitions."""
        val = dict(zip(self.primary, bits))
        for g, op, a, b in self.gates:
            x, y = val[a], val[b]
            val[g] = (x and y) if op == "and" else (x != y)
        return val

    def satisfied(self, val: dict) -> bool:
        return all(any(val[abs(l)] == (l > 0) for l in c) for c in self.clauses)

    def find_model(self):
        """A satisfying assignment of the entry variables, or None.

        Auxiliary variables are functions of the entries (their clauses force
        it), so running over the entries alone is a complete search.
        """
        for bits in itertools.product((False, True), repeat=len(self.primary)):
            val = self.assignment(bits)
            if self.satisfied(val):
                return {self.names[v]: int(val[v]) for v in self.primary}
        return None


def _matrix(cnf: CnfInstance, name: str, n: int) -> list[list[int]]:
    return [[cnf.var(f"{name}[{i + 1},{j + 1}]") for j in range(n)] for i in range(n)]


def _product(cnf: CnfInstance, X, Y) -> list[list[int]]:
    n = len(X)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for k in range(n):
                g = cnf.gate_and(X[i][k], Y[k][j])
                acc = g if acc is None else cnf.gate_xor(acc, g)
            row.append(acc)
        out.append(row)
    return out


def _transpose(X):
    return [list(r) for r in zip(*X)]


def _assert_identity(cnf: CnfInstance, P) -> None:
    for i, row in enumerate(P):
        for j, v in enumerate(row):
            cnf.add(v if i == j else -v)


def _assert_zero(cnf: CnfInstance, P) -> None:
    for row in P:
        for v in row:
            cnf.add(-v)


def _differs_from_identity(P) -> list[int]:
    return [(-v if i == j else v) for i, row in enumerate(P) for j, v in enumerate(row)]


def emit_tautology(identity: str, n: int) -> CnfInstance:
    """CNF of the negation of ``identity`` for n x n matrices over Z2."""
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; choose from {sorted(IDENTITIES)}")
    if n < 1:
        raise ValueError("n must be at least 1")
    cnf = CnfInstance(description=f"negation of {IDENTITIES[identity]} for {n}x{n} matrices over Z2")
    A, B = _matrix(cnf, "A", n), _matrix(cnf, "B", n)
    C = _matrix(cnf, "C", n) if identity in ("inverse-unique", "zero-divisor") else None
    _assert_identity(cnf, _product(cnf, A, B))
    if identity == "inverse-unique":
        _assert_identity(cnf, _product(cnf, A, C))
        cnf.add(*[cnf.gate_xor(B[i][j], C[i][j]) for i in range(n) for j in range(n)])
    elif identity == "zero-divisor":
        _assert_zero(cnf, _product(cnf, A, C))
        cnf.add(*[C[i][j] for i in range(n) for j in range(n)])
    elif identity == "commute":
        cnf.add(*_differs_from_identity(_product(cnf, B, A)))
    elif identity == "transpose":
        cnf.add(*_differs_from_identity(_product(cnf, _transpose(A), _transpose(B))))
    else:
        cnf.add(*[cnf.gate_xor(A[i][j], B[i][j]) for i in range(n) for j in range(n)])
    return cnf


def parse_dimacs(text: str) -> tuple[int, list[tuple]]:
    """Read DIMACS CNF back; checks the header counts and variable range."""
    header = None
    clauses: list[tuple] = []
    current: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p "):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad header {line!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if header is None:
        raise ValueError("missing 'p cnf' header")
    if current:
        raise ValueError("last clause is not terminated by 0")
    nv, nc = header
    if nc != len(clauses):
        raise ValueError(f"header says {nc} clauses, found {len(clauses)}")
    if any(abs(l) > nv for c in clauses for l in c):
        raise ValueError("literal outside the declared variable range")
    return nv, clauses
