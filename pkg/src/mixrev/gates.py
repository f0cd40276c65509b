"""Named reversible gates: permutation plus matrix, over a fixed register shape."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Callable, Optional

import numpy as np

from . import linalg as la
from .logic import cyclic_and, cyclic_or
from .permutation import Permutation, as_table, inverse, to_matrix
from .radix import RegisterShape, as_shape, digits_to_index
from .table import TruthTable


@dataclass(frozen=True, eq=False)
class Gate:
    """A named operator on ``shape``.

    ``permutation`` is set exactly for classical reversible gates, and then
    ``matrix`` must equal its permutation matrix.
    """

    name: str
    shape: RegisterShape
    matrix: np.ndarray
    permutation: Optional[Permutation] = None

    def __post_init__(self):
        shape = as_shape(self.shape)
        m = np.array(self.matrix, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "matrix", m)
        if m.shape != (shape.dimension, shape.dimension):
            raise ValueError(f"{self.name}: matrix {m.shape} does not fit {shape}")
        if not la.is_unitary(m):
            raise ValueError(f"{self.name}: matrix is not unitary")
        if self.permutation is not None and not np.array_equal(m, to_matrix(self.permutation)):
            raise ValueError(f"{self.name}: matrix disagrees with its permutation")

    @property
    def is_classical(self) -> bool:
        return self.permutation is not None

    def __repr__(self) -> str:
        return f"Gate({self.name!r}, {list(self.shape)})"

    def table(self) -> TruthTable:
        if self.permutation is None:
            raise ValueError(f"{self.name} is not a classical gate")
        return as_table(self.permutation, self.shape)

    def __call__(self, *digits: int) -> tuple[int, ...]:
        return self.table()(*digits)

    def inverse(self) -> "Gate":
        """The inverse gate; a library gate when one matches, else ``NAME^-1``."""
        if self.permutation is None:
            return Gate(f"{self.name}^-1", self.shape, self.matrix.conj().T)
        inv = inverse(self.permutation)
        for name in (self.name, *GATE_NAMES):
            g = gate(name) if name in GATE_NAMES else None
            if g is not None and g.shape == self.shape and g.permutation == inv:
                return g
        return Gate(f"{self.name}^-1", self.shape, to_matrix(inv), inv)


def classical(name: str, shape, fn: Callable[..., tuple[int, ...]], matrix=None) -> Gate:
    """Gate from a digit-level map ``fn(*word) -> word``.

    ``matrix`` defaults to the permutation matrix; passing an independently
    built one (e.g. a projector expansion) makes the constructor cross-check it.
    """
    shape = as_shape(shape)
    perm = Permutation(digits_to_index(shape, fn(*w)) for w in shape.words())
    return Gate(name, shape, to_matrix(perm) if matrix is None else matrix, perm)


def _x3() -> np.ndarray:
    return np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)


def _x3_inv() -> np.ndarray:
    return np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=complex)


def _builders() -> dict[str, Callable[[], Gate]]:
    P, I, tensor = la.projector, la.identity, la.tensor
    NOT, X3, X3i = la.NOT, _x3(), _x3_inv()

    def twotri(flip_on: int):
        # b -> b - a (mod 3), then NOT on a when b == flip_on
        def fn(a, b):
            b = (b - a) % 3
            return (1 - a if b == flip_on else a, b)
        return fn

    return {
        "NOT": lambda: classical("NOT", [2], lambda a: (1 - a,), NOT),
        "CNOT": lambda: classical(
            "CNOT", [2, 2], lambda a, b: (a, b ^ a), la.conditional(2, [I(2), NOT])
        ),
        "TOFFOLI": lambda: classical(
            "TOFFOLI",
            [2, 2, 2],
            lambda a1, a2, b: (a1, a2, b ^ (a1 & a2)),
            tensor(P(2, 1), P(2, 1), NOT)
            + tensor(tensor(P(2, 0), P(2, 0)) + tensor(P(2, 0), P(2, 1))
                     + tensor(P(2, 1), P(2, 0)), I(2)),
        ),
        "X3": lambda: classical("X3", [3], lambda a: ((a + 1) % 3,), X3),
        "X3_INV": lambda: classical("X3_INV", [3], lambda a: ((a - 1) % 3,), X3i),
        "AND23": lambda: classical("AND23", [2, 3], twotri(2)),
        "OR23": lambda: classical("OR23", [2, 3], twotri(1)),
        "AND_C": lambda: classical(
            "AND_C", [3, 3], lambda a, b: (cyclic_and(a, b), (b - a) % 3)
        ),
        "OR_C": lambda: classical(
            "OR_C", [3, 3], lambda a, b: (cyclic_or(a, b), (b - a) % 3)
        ),
        "CX_STAR": lambda: classical(
            "CX_STAR", [3, 3], lambda a, b: (a, (b - a) % 3),
            la.conditional(3, [I(3), X3i, X3]),
        ),
        "C2_STAR": lambda: classical(
            "C2_STAR", [3, 3], lambda a, b: ((a - 1) % 3 if b == 2 else a, b),
            tensor(I(3), I(3) - P(3, 2)) + tensor(X3i, P(3, 2)),
        ),
        "C1": lambda: classical(
            "C1", [3, 3], lambda a, b: ((a + 1) % 3 if b == 1 else a, b),
            tensor(I(3), I(3) - P(3, 1)) + tensor(X3, P(3, 1)),
        ),
        "SUB_MOD3": lambda: classical("SUB_MOD3", [3, 3], lambda a, b: (a, (b - a) % 3)),
    }


GATE_NAMES: tuple[str, ...] = tuple(_builders())


@cache
def gate(name: str) -> Gate:
    try:
        build = _builders()[name]
    except KeyError:
        raise KeyError(f"unknown gate {name!r}; known: {', '.join(GATE_NAMES)}") from None
    return build()


def all_gates() -> list[Gate]:
    return [gate(n) for n in GATE_NAMES]
