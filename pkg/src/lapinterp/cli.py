"""The ``lapinterp`` command.

Exit status: 0 on success, 1 when a check finds a counterexample (or a proof
is rejected), 2 on usage or input errors.  ``--format kv`` switches the
report to ``key=value`` lines for scripts.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .config import VerifyConfig

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- output ----------------------------------------------------------------------------


class Out:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, text: str, **fields) -> None:
        """Human text, or the fields as key=value lines."""
        if self.fmt == "kv":
            for k, v in fields.items():
                self.stream.write(f"{k}={v}\n")
        else:
            self.stream.write(text + "\n")


def _read_source(args) -> str:
    if getattr(args, "infile", None):
        try:
            return Path(args.infile).read_text()
        except OSError as err:
            raise UsageError(f"cannot read {args.infile}: {err.strerror}") from None
    if getattr(args, "expr", None):
        return args.expr
    raise UsageError("give an expression or --in FILE")


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# -- value parsing ------------------------------------------------------------------------


def _lap_value(name: str, sort: str, text: str, ring):
    from .lap.evaluator import MatVal

    try:
        if sort == "formula":
            low = text.lower()
            if low not in ("true", "false", "1", "0"):
                raise ValueError
            return low in ("true", "1")
        data = json.loads(text)
        if sort == "index":
            if not isinstance(data, int) or data < 0:
                raise ValueError
            return data
        if sort == "field":
            if not isinstance(data, int):
                raise ValueError
            return ring.norm(data)
        if not (isinstance(data, list) and all(isinstance(r, list) for r in data)):
            raise ValueError
        return MatVal.of(data, ring)
    except (ValueError, json.JSONDecodeError):
        raise UsageError(f"bad value for {sort} variable {name}: {text!r}") from None


def _assignments(pairs) -> dict:
    out = {}
    for item in pairs or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise UsageError(f"--set expects NAME=VALUE, got {item!r}")
        out[name.strip()] = value.strip()
    return out


def _format_value(v) -> str:
    from .lap.evaluator import MatVal

    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, MatVal):
        return json.dumps(v.tolist()) if v.rows and v.cols else f"{v.rows}x{v.cols} []"
    return str(v)


# -- commands ------------------------------------------------------------------------------


def cmd_parse(args, out: Out) -> int:
    from .lap import ast as L
    from .lap.parser import parse, show

    node = parse(_read_source(args))
    if isinstance(node, L.Sequent):
        kind = "sequent"
    elif isinstance(node, (L.Rel, L.Not, L.And, L.Or, L.FormulaVar)):
        kind = "formula"
    else:
        kind = node.sort
    out.emit(f"{kind}: {show(node)}", kind=kind, printed=show(node))
    return EXIT_OK


def cmd_eval(args, out: Out) -> int:
    from .lap import ast as L
    from .lap.evaluator import LapEvaluator
    from .lap.parser import parse
    from .ring import ring_named

    ring = ring_named(args.ring)
    node = parse(_read_source(args))
    sorts = dict(L.free_var_sorts(node))
    for name in L.formula_vars(node):
        sorts[name] = "formula"
    given = _assignments(args.set)
    unknown = sorted(set(given) - set(sorts))
    if unknown:
        raise UsageError(f"no free variable named {', '.join(unknown)}")
    missing = sorted(set(sorts) - set(given))
    if missing:
        raise UsageError(f"missing values for {', '.join(missing)} (use --set NAME=VALUE)")
    env = {n: _lap_value(n, sorts[n], given[n], ring) for n in sorts}
    value = LapEvaluator(ring).evaluate(node, env)
    shown = _format_value(value)
    out.emit(shown, result=shown)
    return EXIT_OK


def cmd_translate(args, out: Out) -> int:
    from .interp.translator import TranslationContext, translate
    from .lap.parser import parse, show
    from .twosorted import show as show2

    node = parse(_read_source(args))
    ctx = TranslationContext(args.target, equality_bound=args.equality_bound)
    result = translate(node, args.target, ctx)
    header = f"; {args.target} translation of: {show(node)}\n"
    mapping = ", ".join(f"{k} -> {v}" for k, v in sorted(ctx.var_map().items()) if k != v)
    if mapping:
        header += f"; variables: {mapping}\n"
    _write(args, header + show2(result) + "\n")
    return EXIT_OK


def cmd_eval2s(args, out: Out) -> int:
    from .bitstring import BitString
    from .interp.vocab import INTERP
    from .twosorted import classify, free_vars, is_string_var, parse_formula
    from .twosorted.evaluator import Evaluator

    phi = parse_formula(_read_source(args), INTERP)
    given = _assignments(args.set)
    env = {}
    for name in free_vars(phi):
        if name not in given:
            raise UsageError(f"missing value for {name} (use --set NAME=VALUE)")
        text = given[name]
        try:
            env[name] = BitString.parse(text) if is_string_var(name) else int(text)
        except ValueError:
            raise UsageError(f"bad value for {name}: {text!r}") from None
    ev = Evaluator(INTERP, budget=args.budget)
    value = ev.formula(phi, env)
    cls = classify(phi)
    out.emit(
        f"{_format_value(value)} ({cls}, {ev.enumerations} quantifier steps)",
        result=_format_value(value), cls=cls, steps=ev.enumerations,
    )
    return EXIT_OK


def cmd_difftest(args, out: Out) -> int:
    from .interp.difftest import DiffConfig, axiom_corpus, differential_test

    rings = ("z2", "z") if args.ring == "both" else (args.ring,)
    status = EXIT_OK
    for ring in rings:
        start = time.perf_counter()
        cfg = DiffConfig(trials=args.trials, depth=args.depth, seed=args.seed, size_bound=args.size_bound)
        report = differential_test(ring, cfg)
        secs = time.perf_counter() - start
        out.emit(
            f"{report.describe()} [{secs:.2f}s]",
            ring=ring, trials=report.trials, mismatches=len(report.mismatches), seconds=f"{secs:.3f}",
        )
        if not report.ok:
            status = EXIT_FAIL
        if args.corpus:
            corpus = axiom_corpus(ring, seed=args.seed)
            out.emit(corpus.describe(), ring=ring, corpus_failures=len(corpus.failures))
            if not corpus.ok:
                status = EXIT_FAIL
    return status


def cmd_check_proof(args, out: Out) -> int:
    from .lap.proof import check_proof_file

    status = EXIT_OK
    for path in args.files:
        try:
            report = check_proof_file(path)
        except OSError as err:
            raise UsageError(f"cannot read {path}: {err.strerror}") from None
        bad = report.first_error
        out.emit(
            f"{path}: {report.describe()}",
            file=path, accepted=str(report.accepted).lower(),
            **({"line": bad.lineno} if bad is not None else {}),
        )
        if not report.accepted:
            status = EXIT_FAIL
    return status


def _run_suite(name: str, cfg: VerifyConfig):
    from . import linalg
    from .lap.semantic import check_all_axioms

    if name == "cayley-hamilton":
        return [linalg.check_cayley_hamilton_random(cfg.trials, cfg.n, cfg.ring, cfg.seed)]
    if name == "det-axioms":
        return [linalg.check_determinant_axioms(cfg.trials, cfg.n, cfg.ring, cfg.seed)]
    if name == "cofactor":
        return [linalg.check_cofactor(cfg.trials, cfg.n, cfg.ring, cfg.seed)]
    if name == "hard-identities":
        return [linalg.check_hard_identities(cfg.trials, cfg.n, cfg.ring, cfg.seed)]
    if name == "multiplicativity":
        return [linalg.check_multiplicativity(cfg.trials, cfg.n, cfg.ring, cfg.seed)]
    if name == "axioms":
        return check_all_axioms(cfg.ring, trials=cfg.trials, size_bound=cfg.n, seed=cfg.seed)
    raise UsageError(f"unknown suite {name!r}")


SUITES = ("cayley-hamilton", "det-axioms", "cofactor", "hard-identities", "multiplicativity", "axioms")


def cmd_verify(args, out: Out) -> int:
    cfg = VerifyConfig(ring=args.ring, n=args.n, trials=args.trials, seed=args.seed)
    status = EXIT_OK
    for report in _run_suite(args.suite, cfg):
        ok = report.ok
        out.emit(report.describe(), suite=args.suite, ring=cfg.ring, ok=str(ok).lower())
        if not ok:
            status = EXIT_FAIL
    return status


def cmd_emit_cnf(args, out: Out) -> int:
    from .cnf import emit_tautology

    cnf = emit_tautology(args.identity, args.n)
    _write(args, cnf.to_dimacs())
    if not args.certify:
        return EXIT_OK
    if len(cnf.primary) > 24:
        raise UsageError(f"--certify enumerates 2^{len(cnf.primary)} assignments; use n <= 2")
    model = cnf.find_model()
    if model is None:
        sys.stderr.write(f"certified: unsatisfiable ({2 ** len(cnf.primary)} entry assignments)\n")
        return EXIT_OK
    witness = " ".join(f"{k}={v}" for k, v in model.items())
    sys.stderr.write(f"satisfiable: {witness}\n")
    return EXIT_FAIL


def cmd_axioms(args, out: Out) -> int:
    from .lap.axioms import axiom_ids, get_axiom
    from .lap.semantic import check_axiom

    status = EXIT_OK
    for ax_id in axiom_ids(args.ring):
        ax = get_axiom(ax_id)
        line = f"{ax.id:16} {ax.text}"
        fields = {"id": ax.id}
        if args.check:
            rep = check_axiom(ax_id, args.ring, trials=args.trials, seed=args.seed)
            line += "   [ok]" if rep.ok else f"   [FAIL] {rep.describe()}"
            fields["ok"] = str(rep.ok).lower()
            if not rep.ok:
                status = EXIT_FAIL
        out.emit(line, **fields)
    return status


def _matrix_arg(text: str, ring):
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"matrix must be JSON, e.g. [[1,2],[3,4]]; got {text!r}") from None
    if not (isinstance(data, list) and all(isinstance(r, list) and len(r) == len(data) for r in data)):
        raise UsageError("expected a square matrix as a JSON list of rows")
    if not all(isinstance(v, int) for r in data for v in r):
        raise UsageError("matrix entries must be integers")
    return data


def cmd_det(args, out: Out) -> int:
    from . import linalg
    from .ring import ring_named

    ring = ring_named(args.ring)
    A = _matrix_arg(args.matrix, ring)
    d = linalg.det(A, ring)
    out.emit(str(d), det=d)
    return EXIT_OK


def cmd_charpoly(args, out: Out) -> int:
    from . import linalg
    from .ring import ring_named

    ring = ring_named(args.ring)
    A = _matrix_arg(args.matrix, ring)
    coeffs = linalg.char_poly(A, ring)
    out.emit(" ".join(map(str, coeffs)), coefficients=",".join(map(str, coeffs)))
    return EXIT_OK


def cmd_adjoint(args, out: Out) -> int:
    from . import linalg
    from .ring import ring_named

    ring = ring_named(args.ring)
    adj = linalg.adjoint(_matrix_arg(args.matrix, ring), ring)
    text = json.dumps([list(r) for r in adj])
    out.emit(text, adjoint=text)
    return EXIT_OK


# -- argument parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lapinterp", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "kv"), default="text", help="report style")
    # repeated on every subcommand so the flag may follow the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "kv"), default=argparse.SUPPRESS, help="report style")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def source(sp):
        sp.add_argument("expr", nargs="?", help="inline source text")
        sp.add_argument("--in", dest="infile", help="read the source from a file")

    def ring(sp, default="z", choices=("z2", "z")):
        sp.add_argument("--ring", choices=choices, default=default)

    sp = add("parse", help="parse and pretty-print LAp syntax")
    source(sp)
    sp.set_defaults(fn=cmd_parse)

    sp = add("eval", help="evaluate LAp syntax in the standard model")
    source(sp)
    ring(sp)
    sp.add_argument("--set", action="append", metavar="NAME=VALUE",
                    help="variable value; JSON ints and lists of rows, true/false for formula variables")
    sp.set_defaults(fn=cmd_eval)

    sp = add("translate", help="translate LAp syntax to a two-sorted formula")
    source(sp)
    sp.add_argument("--target", choices=("z2", "z"), default="z2")
    sp.add_argument("--out", help="write to a file instead of stdout")
    sp.add_argument("--equality-bound", choices=("dims", "length"), default="dims",
                    help="range of the entrywise comparison in matrix equality")
    sp.set_defaults(fn=cmd_translate)

    sp = add("eval2s", help="evaluate a two-sorted formula (S-expression syntax)")
    source(sp)
    sp.add_argument("--set", action="append", metavar="NAME=VALUE",
                    help="numbers as integers, strings as {0,3} or low-bit-first 1001")
    sp.add_argument("--budget", type=int, default=1 << 22, help="quantifier step budget")
    sp.set_defaults(fn=cmd_eval2s)

    sp = add("difftest", help="compare direct and translated evaluation")
    ring(sp, default="both", choices=("z2", "z", "both"))
    sp.add_argument("--trials", type=int, default=500)
    sp.add_argument("--depth", type=int, default=4)
    sp.add_argument("--size-bound", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--corpus", action="store_true", help="also translate the axiom corpus")
    sp.set_defaults(fn=cmd_difftest)

    sp = add("check-proof", help="check LAp proof files")
    sp.add_argument("files", nargs="+")
    sp.set_defaults(fn=cmd_check_proof)

    sp = add("verify", help="run a randomized verification suite")
    sp.add_argument("suite", choices=SUITES)
    ring(sp)
    sp.add_argument("--n", type=int, default=4, help="largest matrix size (dimension bound for axioms)")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=cmd_verify)

    sp = add("emit-cnf", help="DIMACS CNF of a negated hard identity over Z2")
    sp.add_argument("--identity", default="commute",
                    choices=("inverse-unique", "zero-divisor", "commute", "transpose", "corrupt"))
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--out", help="write to a file instead of stdout")
    sp.add_argument("--certify", action="store_true",
                    help="decide satisfiability by enumerating the entry variables (n <= 2)")
    sp.set_defaults(fn=cmd_emit_cnf)

    sp = add("axioms", help="list (and optionally check) the axioms")
    ring(sp)
    sp.add_argument("--check", action="store_true")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=cmd_axioms)

    for name, fn, text in (
        ("det", cmd_det, "determinant"),
        ("charpoly", cmd_charpoly, "characteristic polynomial, highest degree first"),
        ("adjoint", cmd_adjoint, "adjugate matrix"),
    ):
        sp = add(name, help=text)
        sp.add_argument("matrix", help="JSON list of rows")
        ring(sp)
        sp.set_defaults(fn=fn)
    return p


def main(argv=None) -> int:
    from .interp.translator import TranslationError
    from .lap.axioms import AxiomError
    from .lap.evaluator import LapEvalError
    from .lap.parser import LapSyntaxError
    from .twosorted.evaluator import BudgetExceeded, Unsupported
    from .twosorted.sexpr import SexprError

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 0:
        sys.stderr.write("error: --n must be non-negative\n")
        return EXIT_USAGE
    out = Out(args.format)
    try:
        return args.fn(args, out)
    except (LapSyntaxError, UsageError, SexprError, TranslationError, AxiomError, LapEvalError,
            Unsupported, BudgetExceeded, ValueError) as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE

if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
