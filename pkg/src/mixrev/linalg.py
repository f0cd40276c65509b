"""Dense complex operators and state vectors over mixed-radix registers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .radix import RegisterShape, as_shape, digits_to_index

# Largest register dimension any dense construction here will build.
MAX_DIMENSION = 4096
UNITARY_TOL = 1e-12
NORM_TOL = 1e-12

NOT = np.array([[0, 1], [1, 0]], dtype=complex)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def check_dimension(n: int) -> None:
    if n > MAX_DIMENSION:
        raise ValueError(f"dimension {n} exceeds MAX_DIMENSION={MAX_DIMENSION}")


def tensor(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product; the first factor is the most significant wire."""
    out = reduce(np.kron, (np.asarray(f, dtype=complex) for f in factors))
    check_dimension(out.shape[0])
    return out


def projector(radix: int, k: int) -> np.ndarray:
    if not 0 <= k < radix:
        raise ValueError(f"projector index {k} out of range for radix {radix}")
    p = np.zeros((radix, radix), dtype=complex)
    p[k, k] = 1
    return p


def conditional(control_radix: int, branches: Sequence[np.ndarray]) -> np.ndarray:
    """``sum_k |k><k| (x) branches[k]`` with the control as the first factor."""
    if len(branches) != control_radix:
        raise ValueError(f"need {control_radix} branches, got {len(branches)}")
    shapes = {np.shape(b) for b in branches}
    if len(shapes) != 1:
        raise ValueError(f"branch sizes differ: {sorted(shapes)}")
    (rows, cols), = shapes
    if rows != cols:
        raise ValueError("branches must be square")
    return sum(tensor(projector(control_radix, k), b) for k, b in enumerate(branches))


def is_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError("is_unitary needs a square matrix")
    err = u.conj().T @ u - np.eye(u.shape[0])
    return float(np.max(np.abs(err))) <= tol


@dataclass(frozen=True, eq=False)
class StateVector:
    shape: RegisterShape
    amplitudes: np.ndarray

    def __post_init__(self):
        shape = as_shape(self.shape)
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != shape.dimension:
            raise ValueError(f"{shape} needs {shape.dimension} amplitudes, got {amps.size}")
        norm = float(np.sum(np.abs(amps) ** 2))
        if abs(norm - 1) > NORM_TOL:
            raise ValueError(f"state is not normalized (squared norm {norm!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, shape, digits: Sequence[int]) -> "StateVector":
        shape = as_shape(shape)
        amps = np.zeros(shape.dimension, dtype=complex)
        amps[digits_to_index(shape, digits)] = 1
        return cls(shape, amps)

    def __len__(self) -> int:
        return self.amplitudes.size

    def allclose(self, other: "StateVector", atol: float = NORM_TOL) -> bool:
        return self.shape == other.shape and bool(
            np.allclose(self.amplitudes, other.amplitudes, rtol=0, atol=atol)
        )

    def product(self, other: "StateVector") -> "StateVector":
        return StateVector(self.shape + other.shape, np.kron(self.amplitudes, other.amplitudes))


def apply(u: np.ndarray, s: StateVector, tol: float = UNITARY_TOL) -> StateVector:
    u = np.asarray(u, dtype=complex)
    if u.shape != (len(s), len(s)):
        raise ValueError(f"operator of shape {u.shape} cannot act on {len(s)} amplitudes")
    if not is_unitary(u, tol):
        raise ValueError("operator is not unitary")
    return StateVector(s.shape, u @ s.amplitudes)


def not_path(t: float) -> np.ndarray:
    """A continuous unitary path from the identity (t=0) to NOT (t=1).

    ``U(t) = exp(i*pi*t/2) * (cos(pi*t/2) I - i sin(pi*t/2) NOT)``, which is
    ``NOT**t`` on the principal branch. Endpoints are pinned to exact 0/1
    entries so no rounding residue leaks into ``t in {0, 1}``.
    """
    if not 0 <= t <= 1:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    if t == 0:
        return identity(2)
    if t == 1:
        return NOT.copy()
    theta = np.pi * t / 2
    return np.exp(1j * theta) * (np.cos(theta) * identity(2) - 1j * np.sin(theta) * NOT)
