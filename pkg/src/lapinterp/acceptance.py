"""The nine acceptance criteria as plain functions.

Each ``criterion_N`` runs its checks and returns a list of failure messages
(empty when everything holds).  :func:`run` times one criterion against its
limit from :class:`~lapinterp.config.AcceptanceConfig`, and
:func:`run_all` does all nine.  ``tests/test_acceptance.py`` and
``scripts/acceptance_report.py`` are thin wrappers around these.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from pathlib import Path

from .bitstring import (
    BitString,
    bin_value,
    decode_list,
    encode_list,
    encode_number_table,
    encode_numbers,
    encode_table,
    entry,
    length,
    pair,
    row,
    row2,
    unpair,
)
from .cnf import emit_tautology
from .config import AcceptanceConfig
from .zint import add_z, encode_int, encode_int_list, is_zero, mul_z, sub_z, sum_z, value
from .zmatrix import (
    mat2_decode,
    mat2_encode,
    matz_decode,
    matz_encode,
    par,
    pow_seq2,
    pow_seq2_star,
    pow_seq2_star_direct,
    pow_seq_z,
)

TITLES = {
    1: "encoding",
    2: "integer arithmetic",
    3: "matrix powering",
    4: "axiom validity",
    5: "translation truth preservation",
    6: "one-bit parity flip",
    7: "linear-algebra principles",
    8: "proof checker fixtures",
    9: "tautology emitter",
}

DEFAULT_FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


@dataclass
class Outcome:
    number: int
    failures: list
    seconds: float
    limit: float

    @property
    def in_time(self) -> bool:
        return self.seconds < self.limit

    @property
    def ok(self) -> bool:
        return not self.failures and self.in_time

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"criterion {self.number} ({TITLES[self.number]}): {status} in {self.seconds:.2f}s (limit {self.limit:g}s)"
        if self.failures:
            text += f"; {len(self.failures)} failure(s), first: {self.failures[0]}"
        elif not self.in_time:
            text += "; over the time limit"
        return text


# -- 1 ---------------------------------------------------------------------------------


def criterion_1(cfg: AcceptanceConfig) -> list:
    fails = []
    m = cfg.encoding_pairs_max
    seen = set()
    for x, y in itertools.product(range(m + 1), repeat=2):
        z = pair(x, y)
        if z in seen or unpair(z) != (True, x, y):
            fails.append(f"pair({x},{y}) = {z} is not inverted uniquely")
        seen.add(z)
    # codes below (m+1)(m+2) are exactly the pairs with x + y <= m
    for z in range((m + 1) * (m + 2)):
        if unpair(z)[0] != (z in seen):
            fails.append(f"unpair({z}) disagrees with the enumeration")
    s = cfg.encoding_shape_max
    for r, c in itertools.product(range(1, s + 1), repeat=2):
        cells = [[BitString.from_positions({i, j + 1, (i * c + j) % 4}) for j in range(c)] for i in range(r)]
        Z = encode_table(cells)
        if any(row2(i, j, Z) != cells[i][j] for i in range(r) for j in range(c)):
            fails.append(f"Row2 round trip fails at {r}x{c}")
        if decode_list(r, encode_list([cells[i][0] for i in range(r)])) != [cells[i][0] for i in range(r)]:
            fails.append(f"Row round trip fails at {r}x{c}")
        nums = [[(5 * i + 3 * j) % 11 for j in range(c)] for i in range(r)]
        N = encode_number_table(nums)
        if any(entry(i, j, N) != nums[i][j] for i in range(r) for j in range(c)):
            fails.append(f"entry/seq round trip fails at {r}x{c}")
    X = BitString.parse("{0,3,4}")
    if length(X) != 5 or bin_value(X) != 25:
        fails.append("worked example {0,3,4}: expected length 5 and value 25")
    return fails


# -- 2 ---------------------------------------------------------------------------------


def criterion_2(cfg: AcceptanceConfig) -> list:
    fails = []
    rng = random.Random(f"acceptance/2/{cfg.seed}")
    for _ in range(cfg.arithmetic_pairs):
        bits = rng.choice((8, 64, 200))
        a = rng.randint(-(1 << bits), 1 << bits)
        b = rng.randint(-(1 << bits), 1 << bits)
        if rng.random() < 0.05:
            b = rng.choice((0, -a, a))
        X, Y = encode_int(a), encode_int(b)
        if value(add_z(X, Y)) != a + b or value(sub_z(X, Y)) != a - b or value(mul_z(X, Y)) != a * b:
            fails.append(f"arithmetic disagrees with integers at ({a}, {b})")
        if is_zero(mul_z(X, Y)) and not (is_zero(X) or is_zero(Y)):
            fails.append(f"zero divisor found: {a} * {b}")
    for _ in range(300):
        vs = [rng.randint(-10**6, 10**6) for _ in range(rng.randint(0, 12))]
        pos = sum(v for v in vs if v > 0)
        neg = sum(-v for v in vs if v < 0)
        if value(sum_z(len(vs), encode_int_list(vs))) != pos - neg:
            fails.append(f"split sum wrong on {vs}")
    return fails


# -- 3 ---------------------------------------------------------------------------------


def _naive_powers(A, k, mod):
    n = len(A)
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    out = [tuple(map(tuple, P))]
    for _ in range(k):
        P = [[sum(A[i][t] * P[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        if mod:
            P = [[v % mod for v in r] for r in P]
        out.append(tuple(map(tuple, P)))
    return out


def criterion_3(cfg: AcceptanceConfig) -> list:
    fails = []
    rng = random.Random(f"acceptance/3/{cfg.seed}")
    for ring in ("z2", "z"):
        for _ in range(cfg.powering_instances):
            n, k = rng.randint(1, 5), rng.randint(0, 8)
            lo, hi = (0, 1) if ring == "z2" else (-9, 9)
            A = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
            if ring == "z2":
                Y, dec = pow_seq2(n, k, mat2_encode(A)), mat2_decode
            else:
                Y, dec = pow_seq_z(n, k, matz_encode(A)), matz_decode
            want = _naive_powers(A, k, 2 if ring == "z2" else None)
            if any(dec(n, row(p, Y)) != want[p] for p in range(k + 1)):
                fails.append(f"{ring} powers of {A} up to {k} disagree")
    for _ in range(cfg.powering_instances):
        b = rng.randint(1, 4)
        ns = [rng.randint(1, 4) for _ in range(b)]
        ks = [rng.randint(0, 6) for _ in range(b)]
        X = encode_list([mat2_encode([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]) for n in ns])
        W1, W2 = encode_numbers(ns), encode_numbers(ks)
        if pow_seq2_star(b, W1, W2, X) != pow_seq2_star_direct(b, W1, W2, X):
            fails.append(f"aggregate powering differs for sizes {ns}, exponents {ks}")
    return fails


# -- 4, 5 ------------------------------------------------------------------------------


def criterion_4(cfg: AcceptanceConfig) -> list:
    from .lap import check_all_axioms

    fails = []
    for ring in ("z2", "z"):
        for rep in check_all_axioms(ring, trials=cfg.axiom_trials, size_bound=cfg.axiom_size_bound, seed=cfg.seed):
            if not rep.ok:
                fails.append(rep.describe())
    return fails


def criterion_5(cfg: AcceptanceConfig) -> list:
    from .interp import DiffConfig, axiom_corpus, differential_test

    fails = []
    dc = DiffConfig(trials=cfg.difftest_trials, depth=cfg.difftest_depth, seed=cfg.seed)
    for ring in ("z2", "z"):
        rep = differential_test(ring, dc)
        if not rep.ok:
            fails.append(rep.describe())
        corpus = axiom_corpus(ring, seed=cfg.seed)
        if not corpus.ok:
            fails.append(corpus.describe())
    return fails


# -- 6 ---------------------------------------------------------------------------------


def criterion_6(cfg: AcceptanceConfig) -> list:
    rng = random.Random(f"acceptance/6/{cfg.seed}")
    fails = []
    for _ in range(cfg.parity_pairs):
        width = rng.randint(0, 300)
        X = BitString.from_positions(t for t in range(width) if rng.random() < 0.5)
        t = rng.randint(0, width + 5)
        if par(X.flip(t)) == par(X):
            fails.append(f"flipping bit {t} of {X.to_set_text()} kept the parity")
    return fails


# -- 7 ---------------------------------------------------------------------------------


def criterion_7(cfg: AcceptanceConfig) -> list:
    from . import linalg as L

    n, seed = cfg.linalg_n_max, cfg.seed
    reports = []
    for ring in ("z2", "z"):
        reports += [
            L.check_cayley_hamilton_random(cfg.cayley_hamilton_trials, n, ring, seed),
            L.check_determinant_axioms(200, n, ring, seed),
            L.exhaustive_agreement(2, ring),
            L.check_cofactor(200, 4, ring, seed, n_min=4),
            L.check_hard_identities(cfg.hard_identity_pairs, 4, ring, seed),
        ]
    return [r.describe() for r in reports if not r.ok]


# -- 8 ---------------------------------------------------------------------------------


def criterion_8(cfg: AcceptanceConfig, fixtures: Path = DEFAULT_FIXTURES) -> list:
    from .lap import check_proof_file

    fails = []
    accepted, rejected = [], []
    for path in sorted(Path(fixtures).glob("*.proof")):
        rep = check_proof_file(path)
        (accepted if rep.accepted else rejected).append((path, rep))
        if path.name.startswith("bad_") == rep.accepted:
            fails.append(f"{path.name}: unexpected verdict ({rep.describe()})")
    if len(accepted) < 3 or len(rejected) < 3:
        fails.append(f"need 3 accepted and 3 rejected proofs, have {len(accepted)} and {len(rejected)}")
    texts = [p.read_text() for p, _ in accepted]
    if not any("ind(" in t for t in texts):
        fails.append("no accepted proof uses induction")
    if not any("meq(" in t for t in texts):
        fails.append("no accepted proof uses matrix equality")
    for path, rep in rejected:
        bad = rep.first_error
        if bad is None or f"line {bad.lineno}" not in rep.describe():
            fails.append(f"{path.name}: rejection does not name a line")
    return fails


# -- 9 ---------------------------------------------------------------------------------


def criterion_9(cfg: AcceptanceConfig) -> list:
    fails = []
    for n in (1, 2):
        model = emit_tautology("commute", n).find_model()
        if model is not None:
            fails.append(f"AB=I -> BA=I at n={n}: negation satisfied by {model}")
    if emit_tautology("corrupt", 2).find_model() is None:
        fails.append("corrupted identity at n=2 has no witness")
    return fails


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 10)}


def run(number: int, cfg: AcceptanceConfig | None = None) -> Outcome:
    cfg = cfg or AcceptanceConfig()
    start = time.perf_counter()
    failures = CRITERIA[number](cfg)
    return Outcome(number, failures, time.perf_counter() - start, cfg.limits[number])


def run_all(cfg: AcceptanceConfig | None = None) -> list[Outcome]:
    return [run(n, cfg) for n in CRITERIA]
