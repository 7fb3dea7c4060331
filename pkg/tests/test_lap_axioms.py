"""The nonlogical axioms: instantiation and truth in the standard model."""

import pytest

from lapinterp.lap import (
    AxiomError,
    axiom_ids,
    check_axiom,
    get_axiom,
    instantiate,
    parse_sequent,
    parse_term,
    semantic_check_sequent,
    show,
)


def test_axiom_lists_per_ring():
    z2, z = set(axiom_ids("z2")), set(axiom_ids("z"))
    assert "A21" in z2 and "A21" not in z
    assert "A21z" in z and "A21z" not in z2
    assert "A4.inv" in z2 and "A4.inv" not in z
    for n in range(1, 37):
        assert any(a == f"A{n}" or a.startswith(f"A{n}.") or a.startswith(f"A{n}z") for a in z2 | z), n


def test_a21_over_z_is_the_integral_domain_law():
    assert show(get_axiom("A21", "z").sequent) == "a * b = 0, !(a = 0) |- b = 0"
    assert show(get_axiom("A21", "z2").sequent) == "!(a = 0) |- a * inv(a) = 1"


def test_a19_instance():
    s = instantiate("A19", {"a": parse_term("e(A,1,1)")}, "z")
    assert show(s) == "|- e(A, 1, 1) + (-e(A, 1, 1)) = 0"


def test_a35_instance():
    s = instantiate("A35", {"A": parse_term("identity(2)")})
    assert show(s) == "|- p(0, identity(2)) = identity(r(identity(2)))"


def test_a5_shape():
    assert show(instantiate("A5")) == "i1 = j1, i2 = j2, i1 <= i2 |- j1 <= j2"


def test_unknown_axiom():
    with pytest.raises(AxiomError):
        get_axiom("A99")


def test_substitution_sort_is_checked():
    with pytest.raises(AxiomError):
        instantiate("A19", {"a": parse_term("A")}, "z")


@pytest.mark.parametrize("ring", ["z2", "z"])
@pytest.mark.parametrize("axiom_id", ["A29.1", "A29.3", "A30", "A33", "A34", "A35", "A36"])
def test_sample_axioms_hold(ring, axiom_id):
    report = check_axiom(axiom_id, ring, trials=150, seed=2)
    assert report.ok, report.describe()


def test_false_sequent_gets_a_counterexample():
    report = semantic_check_sequent(parse_sequent("|- A = transpose(A)"), "z")
    assert not report.ok
    assert "counterexample" in report.describe()


def test_inverse_uniqueness_over_z2():
    s = parse_sequent(
        "A*B = identity(r(A)), A*C = identity(r(A)), r(A) = c(A), r(B) = c(B), "
        "r(C) = c(C), r(A) = r(B), r(A) = r(C) |- B = C"
    )
    assert semantic_check_sequent(s, "z2", trials=300).ok
