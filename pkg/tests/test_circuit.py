from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mixrev import linalg as la
from mixrev.circuit import (
    Circuit,
    as_matrix,
    as_permutation,
    inverse_circuit,
    lift,
    simulate_classical,
    simulate_quantum,
)
from mixrev.gates import Gate, all_gates, gate
from mixrev.permutation import Permutation, to_matrix
from mixrev.radix import digits_to_index, index_to_digits
from mixrev.table import FormatError

AND_CIRCUIT = Circuit([3, 3]).append("CX_STAR", [0, 1]).append("C2_STAR", [0, 1])
OR_CIRCUIT = Circuit([3, 3]).append("CX_STAR", [0, 1]).append("C1", [0, 1])
TOFFOLI_CIRCUIT = Circuit([2, 2, 2]).append("TOFFOLI", [0, 1, 2])
SQRT_HALF = 1 / np.sqrt(2)


def test_append():
    assert len(Circuit([2, 2]).append("CNOT", [0, 1])) == 1
    with pytest.raises(ValueError, match="radix"):
        Circuit([2, 2]).append("X3", [0])
    with pytest.raises(ValueError, match="duplicate"):
        Circuit([2, 2]).append("CNOT", [0, 0])
    with pytest.raises(ValueError):
        Circuit([2, 2]).append("CNOT", [0, 2])
    with pytest.raises(KeyError):
        Circuit([2, 2]).append("NOSUCH", [0])


def test_simulate_classical_examples():
    assert simulate_classical(AND_CIRCUIT, (1, 1)) == (1, 0)
    assert simulate_classical(Circuit([2, 3]), (1, 2)) == (1, 2)
    assert simulate_classical(TOFFOLI_CIRCUIT, (1, 1, 0)) == (1, 1, 1)
    for w in product(range(3), repeat=2):
        assert simulate_classical(AND_CIRCUIT, w) == gate("AND_C")(*w)
        assert simulate_classical(OR_CIRCUIT, w) == gate("OR_C")(*w)


def test_non_classical_gate_rejected():
    half_not = Gate("HALF_NOT", [2], la.not_path(0.5))
    c = Circuit([2, 2]).append(half_not, [1])
    with pytest.raises(ValueError):
        simulate_classical(c, (0, 0))
    with pytest.raises(ValueError):
        as_permutation(c)
    out = simulate_quantum(c, la.StateVector.basis([2, 2], (0, 0)))
    np.testing.assert_allclose(np.abs(out.amplitudes) ** 2, [0.5, 0.5, 0, 0], atol=1e-12)


def test_simulate_quantum_examples():
    s = la.StateVector.basis([3, 3], (2, 1))
    assert simulate_quantum(AND_CIRCUIT, s).allclose(la.StateVector.basis([3, 3], (1, 2)))
    assert simulate_quantum(Circuit([3, 3]), s).allclose(s)
    bell_in = la.StateVector([2, 2], [SQRT_HALF, 0, SQRT_HALF, 0])
    out = simulate_quantum(Circuit([2, 2]).append("CNOT", [0, 1]), bell_in)
    np.testing.assert_allclose(out.amplitudes, [SQRT_HALF, 0, 0, SQRT_HALF], atol=1e-12)
    with pytest.raises(ValueError):
        simulate_quantum(AND_CIRCUIT, bell_in)


def test_lift_examples():
    assert np.array_equal(lift("NOT", [1], [2, 2]), la.tensor(la.identity(2), la.NOT))
    reversed_cnot = lift("CNOT", [1, 0], [2, 2])
    for a, b in product((0, 1), repeat=2):
        col = reversed_cnot[:, 2 * a + b]
        assert col[2 * (a ^ b) + b] == 1 and col.sum() == 1
    x = lift("X3", [0], [3, 3])
    for a, b in product(range(3), repeat=2):
        assert x[3 * ((a + 1) % 3) + b, 3 * a + b] == 1
    with pytest.raises(ValueError):
        lift("X3", [0], [2, 3])


def test_lift_adjacent_is_tensor():
    shape = [2, 3, 3, 2]
    m = lift("AND_C", [1, 2], shape)
    want = la.tensor(la.identity(2), gate("AND_C").matrix, la.identity(2))
    assert np.array_equal(m, want)


@st.composite
def circuits(draw):
    shape = draw(st.lists(st.sampled_from([2, 3]), min_size=2, max_size=3))
    c = Circuit(shape)
    for _ in range(draw(st.integers(0, 4))):
        candidates = [
            (g, wires) for g in all_gates()
            for wires in product(range(len(shape)), repeat=len(g.shape))
            if len(set(wires)) == len(wires) and all(shape[w] == r for w, r in zip(wires, g.shape))
        ]
        if not candidates:
            break
        g, wires = draw(st.sampled_from(candidates))
        c = c.append(g, wires)
    return c


@settings(max_examples=40, deadline=None)
@given(circuits())
def test_lift_changes_only_selected_wires(c):
    for g, wires in c.steps:
        m = lift(g, wires, c.shape)
        for i, word in enumerate(c.shape.words()):
            j = int(np.flatnonzero(m[:, i])[0])
            out = index_to_digits(c.shape, j)
            local = g(*(word[w] for w in wires))
            for w in range(len(c.shape)):
                assert out[w] == (local[wires.index(w)] if w in wires else word[w])


@settings(max_examples=40, deadline=None)
@given(circuits())
def test_classical_quantum_agreement(c):
    for word in c.shape.words():
        out = simulate_quantum(c, la.StateVector.basis(c.shape, word))
        want = la.StateVector.basis(c.shape, simulate_classical(c, word))
        assert np.max(np.abs(out.amplitudes - want.amplitudes)) <= 1e-12
    assert np.array_equal(to_matrix(as_permutation(c)), as_matrix(c))


@settings(max_examples=30, deadline=None)
@given(circuits(), circuits())
def test_as_matrix_multiplicative(c1, c2):
    if c1.shape != c2.shape:
        return
    assert np.allclose(as_matrix(c1 + c2), as_matrix(c2) @ as_matrix(c1), atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(circuits())
def test_inverse_circuit_undoes(c):
    assert as_permutation(c + inverse_circuit(c)).is_identity()
    assert as_permutation(inverse_circuit(c) + c).is_identity()


def test_inverse_circuit_examples():
    inv = inverse_circuit(TOFFOLI_CIRCUIT)
    assert [g.name for g, _ in inv.steps] == ["TOFFOLI"]
    fan = inverse_circuit(AND_CIRCUIT)
    assert [g.name for g, _ in fan.steps] == ["C2_STAR^-1", "CX_STAR^-1"]
    assert all(simulate_classical(fan, (a, 0)) == (a, a) for a in range(3))
    x = inverse_circuit(Circuit([3]).append("X3", [0]))
    assert x.steps[0][0].name == "X3_INV"


def test_as_permutation_examples():
    assert as_permutation(AND_CIRCUIT) == gate("AND_C").permutation
    assert as_permutation(OR_CIRCUIT) == gate("OR_C").permutation
    assert as_permutation(Circuit([2, 3])).is_identity()
    assert np.max(np.abs(as_matrix(AND_CIRCUIT) - gate("AND_C").matrix)) <= 1e-12


def test_text_round_trip():
    text = "wires: 3 3\ngate CX_STAR 0 1\ngate C2_STAR 0 1\n"
    assert Circuit.from_text(text) == AND_CIRCUIT
    assert AND_CIRCUIT.to_text() == text
    commented = "# AND\nwires: 3 3\n\ngate CX_STAR 0 1  # step one\ngate C2_STAR 0 1\n"
    assert Circuit.from_text(commented) == AND_CIRCUIT


@pytest.mark.parametrize("text", [
    "", "gate CNOT 0 1\n", "wires: 2 2\ngate CNOT\n", "wires: 2 2\nnot CNOT 0 1\n",
    "wires: 2 2\ngate NOSUCH 0\n", "wires: 2 2\ngate X3 0\n", "wires: 2 x\n",
])
def test_text_errors(text):
    with pytest.raises(FormatError):
        Circuit.from_text(text)
