from itertools import product

import numpy as np
import pytest

from mixrev import linalg as la
from mixrev import reference as ref
from mixrev.gates import GATE_NAMES, Gate, all_gates, gate
from mixrev.logic import (
    cyclic_and,
    cyclic_or,
    cyclic_precedes,
    lukasiewicz_and,
    lukasiewicz_or,
    ternary_not,
)
from mixrev.permutation import compose, inverse, order, power, to_matrix

T3 = range(3)


def test_gate_examples():
    assert gate("AND23")(1, 0) == (0, 2)
    assert gate("AND_C")(2, 1) == (1, 2)
    assert gate("OR_C")(0, 1) == (1, 1)
    with pytest.raises(KeyError):
        gate("NOSUCH")


def test_sub_mod3():
    g = gate("SUB_MOD3")
    assert all(g(a, b) == (a, (b - a) % 3) for a, b in product(T3, T3))


@pytest.mark.parametrize("g", all_gates(), ids=lambda g: g.name)
def test_gate_invariants(g):
    assert np.array_equal(g.matrix, to_matrix(g.permutation))
    assert la.is_unitary(g.matrix, 1e-12)


@pytest.mark.parametrize("name, table", [
    ("AND23", ref.AND23), ("OR23", ref.OR23), ("AND_C", ref.AND_C), ("OR_C", ref.OR_C),
])
def test_table_fidelity(name, table):
    g = gate(name)
    assert {w: g(*w) for w in g.shape.words()} == table


@pytest.mark.parametrize("name, boolean", [("AND23", lambda a, b: a & b), ("OR23", lambda a, b: a | b),
                                           ("AND_C", lambda a, b: a & b), ("OR_C", lambda a, b: a | b)])
def test_boolean_corner(name, boolean):
    for a, b in product((0, 1), repeat=2):
        assert gate(name)(a, b)[0] == boolean(a, b)


def test_cyclic_precedes():
    assert cyclic_precedes(0, 1)
    assert cyclic_precedes(2, 0)
    assert not cyclic_precedes(1, 0)
    with pytest.raises(ValueError):
        cyclic_precedes(1, 1)


def test_cyclic_tables():
    assert cyclic_and(0, 2) == 2
    assert cyclic_or(2, 1) == 2
    assert cyclic_and(1, 1) == 1
    for a, b in product(T3, T3):
        assert cyclic_and(a, b) == ref.CYCLIC_AND[a][b]
        assert cyclic_or(a, b) == ref.CYCLIC_OR[a][b]


def test_lukasiewicz_tables():
    x = 2
    assert lukasiewicz_and(1, x) == x
    assert lukasiewicz_or(x, x) == x
    assert all(lukasiewicz_and(0, b) == 0 for b in T3)
    for a, b in product(T3, T3):
        assert lukasiewicz_and(a, b) == ref.LUKASIEWICZ_AND[a][b]
        assert lukasiewicz_or(a, b) == ref.LUKASIEWICZ_OR[a][b]


def test_ternary_not():
    assert [ternary_not(a) for a in T3] == [1, 0, 2]


def test_de_morgan():
    for a, b in product(T3, T3):
        assert ternary_not(cyclic_and(a, b)) == cyclic_or(ternary_not(a), ternary_not(b))


def test_decompositions():
    p = {n: gate(n).permutation for n in GATE_NAMES}
    assert compose(p["C2_STAR"], p["CX_STAR"]) == p["AND_C"]
    assert compose(p["C1"], p["CX_STAR"]) == p["OR_C"]
    assert np.array_equal(gate("C2_STAR").matrix @ gate("CX_STAR").matrix, gate("AND_C").matrix)
    assert np.array_equal(gate("C1").matrix @ gate("CX_STAR").matrix, gate("OR_C").matrix)


def test_twotri_two_step_construction():
    # b -> b - a (mod 3), then flip a where b hits the marker value
    for name, marker in (("AND23", 2), ("OR23", 1)):
        for a, b in product((0, 1), T3):
            b2 = (b - a) % 3
            want = (1 - a if b2 == marker else a, b2)
            assert gate(name)(a, b) == want


def test_x3_laws():
    x, xi = gate("X3").permutation, gate("X3_INV").permutation
    assert power(x, 3).is_identity()
    assert xi == power(x, 2) == inverse(x)
    assert np.array_equal(gate("X3").matrix, ref.X3_MATRIX)
    assert np.array_equal(gate("X3_INV").matrix, ref.X3_INV_MATRIX)


def test_fanout():
    for b in (0, 1):
        assert gate("OR_C")(0, b) == (b, b)
    for name in ("AND_C", "OR_C"):
        inv = gate(name).inverse()
        assert all(inv(a, 0) == (a, a) for a in T3)


def test_periods():
    for name in ("AND_C", "OR_C"):
        p = gate(name).permutation
        assert order(p) == 7
        assert power(p, 6) == inverse(p)
    assert order(gate("TOFFOLI").permutation) == 2


def test_toffoli_projector_expansion():
    P, I, t = la.projector, la.identity, la.tensor
    expansion = t(P(2, 1), P(2, 1), la.NOT) + t(
        t(P(2, 0), P(2, 0)) + t(P(2, 0), P(2, 1)) + t(P(2, 1), P(2, 0)), I(2)
    )
    nested = la.conditional(2, [I(4), la.conditional(2, [I(2), la.NOT])])
    assert np.array_equal(gate("TOFFOLI").matrix, expansion)
    assert np.array_equal(nested, expansion)


def test_gate_inverse_names():
    assert gate("X3").inverse() is gate("X3_INV")
    assert gate("TOFFOLI").inverse() is gate("TOFFOLI")
    inv = gate("AND_C").inverse()
    assert inv.name == "AND_C^-1"
    assert inv.permutation == power(gate("AND_C").permutation, 6)


def test_gate_rejects_inconsistent_matrix():
    with pytest.raises(ValueError):
        Gate("BAD", [2], np.eye(2), gate("NOT").permutation)
    with pytest.raises(ValueError):
        Gate("BAD", [2], np.diag([1, 2]))
