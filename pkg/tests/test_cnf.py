"""Tseitin encodings of the hard identities and their exhaustive certification."""

import itertools

import pytest

from lapinterp.cnf import IDENTITIES, CnfInstance, emit_tautology, parse_dimacs


def brute_force_satisfiable(cnf):
    """Search over every variable, auxiliaries included."""
    for bits in itertools.product((False, True), repeat=cnf.num_vars):
        val = dict(enumerate(bits, start=1))
        if cnf.satisfied(val):
            return True
    return False


@pytest.mark.parametrize("identity", ["inverse-unique", "zero-divisor", "commute", "transpose"])
def test_full_enumeration_at_size_one(identity):
    cnf = emit_tautology(identity, 1)
    assert not brute_force_satisfiable(cnf)


def test_corrupt_identity_needs_size_two():
    # over Z2 the only 1x1 inverse pair is a = b = 1, so A = B does follow at n = 1
    assert not brute_force_satisfiable(emit_tautology("corrupt", 1))
    assert emit_tautology("corrupt", 2).find_model() is not None


@pytest.mark.parametrize("identity", ["inverse-unique", "zero-divisor", "commute", "transpose"])
def test_true_identities_at_size_two(identity):
    assert emit_tautology(identity, 2).find_model() is None


def test_corrupt_witness_is_an_inverse_pair():
    model = emit_tautology("corrupt", 2).find_model()
    assert model is not None
    A = [[model[f"A[{i},{j}]"] for j in (1, 2)] for i in (1, 2)]
    B = [[model[f"B[{i},{j}]"] for j in (1, 2)] for i in (1, 2)]
    AB = [[sum(A[i][k] * B[k][j] for k in range(2)) % 2 for j in range(2)] for i in range(2)]
    assert AB == [[1, 0], [0, 1]]
    assert A != B


def test_entry_variables_come_first():
    cnf = emit_tautology("commute", 2)
    assert cnf.primary == list(range(1, 9))
    assert cnf.names[1] == "A[1,1]" and cnf.names[8] == "B[2,2]"


def test_output_is_deterministic():
    assert emit_tautology("inverse-unique", 3).to_dimacs() == emit_tautology("inverse-unique", 3).to_dimacs()


@pytest.mark.parametrize("identity", sorted(IDENTITIES))
def test_dimacs_round_trip_at_size_three(identity):
    cnf = emit_tautology(identity, 3)
    text = cnf.to_dimacs()
    header = [l for l in text.splitlines() if l.startswith("p ")]
    assert header == [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    nv, clauses = parse_dimacs(text)
    assert nv == cnf.num_vars
    assert clauses == cnf.clauses


@pytest.mark.parametrize(
    "text",
    ["1 2 0\n", "p cnf 2 2\n1 2 0\n", "p cnf 1 1\n1 2 0\n", "p cnf 2 1\n1 2\n", "p dnf 2 1\n1 0\n"],
)
def test_malformed_dimacs(text):
    with pytest.raises(ValueError):
        parse_dimacs(text)


def test_gates_define_their_outputs():
    cnf = CnfInstance()
    a, b = cnf.var("a"), cnf.var("b")
    g_and, g_xor = cnf.gate_and(a, b), cnf.gate_xor(a, b)
    for x, y in itertools.product((False, True), repeat=2):
        val = cnf.assignment((x, y))
        assert val[g_and] == (x and y)
        assert val[g_xor] == (x != y)
        assert cnf.satisfied(val)
        wrong = dict(val)
        wrong[g_xor] = not wrong[g_xor]
        assert not cnf.satisfied(wrong)


def test_bad_arguments():
    with pytest.raises(ValueError):
        emit_tautology("nonsense", 2)
    with pytest.raises(ValueError):
        emit_tautology("commute", 0)
