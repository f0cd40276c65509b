"""Gate sequences on wire subsets of a mixed-radix register.

Steps run left to right, so the whole-circuit operator of ``[A, B]`` is
``B @ A``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from . import linalg as la
from .gates import Gate, gate
from .permutation import Permutation, compose
from .radix import RegisterShape, as_shape, digits_to_index, index_to_digits
from .table import FormatError

Step = tuple[Gate, tuple[int, ...]]


def _resolve(g: Gate | str) -> Gate:
    return gate(g) if isinstance(g, str) else g


def _check_wires(g: Gate, wires: tuple[int, ...], shape: RegisterShape) -> None:
    if len(wires) != len(g.shape):
        raise ValueError(f"{g.name} acts on {len(g.shape)} wires, got {len(wires)}")
    if len(set(wires)) != len(wires):
        raise ValueError(f"duplicate wire in {wires}")
    for w, r in zip(wires, g.shape):
        if not 0 <= w < len(shape):
            raise ValueError(f"wire {w} out of range for {shape}")
        if shape[w] != r:
            raise ValueError(
                f"radix mismatch: {g.name} needs radix {r} on wire {w}, which has {shape[w]}"
            )


@dataclass(frozen=True)
class Circuit:
    shape: RegisterShape
    steps: tuple[Step, ...] = ()

    def __post_init__(self):
        shape = as_shape(self.shape)
        object.__setattr__(self, "shape", shape)
        la.check_dimension(shape.dimension)
        for g, wires in self.steps:
            _check_wires(g, wires, shape)

    def append(self, g: Gate | str, wires: Sequence[int]) -> "Circuit":
        g, wires = _resolve(g), tuple(wires)
        _check_wires(g, wires, self.shape)
        return Circuit(self.shape, self.steps + ((g, wires),))

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.shape != other.shape:
            raise ValueError("cannot concatenate circuits on different registers")
        return Circuit(self.shape, self.steps + other.steps)

    @property
    def is_classical(self) -> bool:
        return all(g.is_classical for g, _ in self.steps)

    def to_text(self) -> str:
        lines = ["wires: " + " ".join(map(str, self.shape))]
        lines += [f"gate {g.name} " + " ".join(map(str, w)) for g, w in self.steps]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Circuit":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or not lines[0].startswith("wires:"):
            raise FormatError("circuit must start with a 'wires:' line")
        try:
            c = cls(RegisterShape(int(t) for t in lines[0][6:].split()))
            for n, ln in enumerate(lines[1:], start=2):
                tok = ln.split()
                if tok[0] != "gate" or len(tok) < 3:
                    raise FormatError(f"line {n}: expected 'gate NAME w1 w2 ...'")
                c = c.append(tok[1], [int(t) for t in tok[2:]])
        except (ValueError, KeyError) as exc:
            raise FormatError(str(exc)) from exc
        return c


def _lift_permutation(p: Permutation, wires: tuple[int, ...], sub: RegisterShape,
                      shape: RegisterShape) -> Permutation:
    images = []
    for word in shape.words():
        local = p(digits_to_index(sub, [word[w] for w in wires]))
        new = list(word)
        for w, d in zip(wires, index_to_digits(sub, local)):
            new[w] = d
        images.append(digits_to_index(shape, new))
    return Permutation(images)


def lift(g: Gate | str, wires: Sequence[int], shape) -> np.ndarray:
    """Full-register operator acting as ``g`` on ``wires`` (in order), identity elsewhere."""
    g, wires, shape = _resolve(g), tuple(wires), as_shape(shape)
    _check_wires(g, wires, shape)
    la.check_dimension(shape.dimension)
    n = shape.dimension
    out = np.zeros((n, n), dtype=complex)
    m = g.matrix
    for col, word in enumerate(shape.words()):
        k = digits_to_index(g.shape, [word[w] for w in wires])
        for r in np.flatnonzero(m[:, k]):
            new = list(word)
            for w, d in zip(wires, index_to_digits(g.shape, int(r))):
                new[w] = d
            out[digits_to_index(shape, new), col] += m[r, k]
    return out


def as_permutation(c: Circuit) -> Permutation:
    if not c.is_classical:
        raise ValueError("circuit contains a non-classical gate")
    ident = Permutation.identity(c.shape.dimension)
    lifted = (_lift_permutation(g.permutation, w, g.shape, c.shape) for g, w in c.steps)
    return reduce(lambda acc, p: compose(p, acc), lifted, ident)


def as_matrix(c: Circuit) -> np.ndarray:
    u = la.identity(c.shape.dimension)
    for g, w in c.steps:
        u = lift(g, w, c.shape) @ u
    return u


def simulate_classical(c: Circuit, digits: Sequence[int]) -> tuple[int, ...]:
    if not c.is_classical:
        raise ValueError("circuit contains a non-classical gate")
    word = list(digits)
    digits_to_index(c.shape, word)  # validates
    for g, wires in c.steps:
        out = g(*(word[w] for w in wires))
        for w, d in zip(wires, out):
            word[w] = d
    return tuple(word)


def simulate_quantum(c: Circuit, s: la.StateVector) -> la.StateVector:
    if s.shape != c.shape:
        raise ValueError(f"state on {s.shape} does not match circuit on {c.shape}")
    for g, w in c.steps:
        s = la.apply(lift(g, w, c.shape), s)
    return s


def inverse_circuit(c: Circuit) -> Circuit:
    return Circuit(c.shape, tuple((g.inverse(), w) for g, w in reversed(c.steps)))
