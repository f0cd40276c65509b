"""Mixed-radix registers and flat-index <-> digit-word conversion.

Digits are big-endian: wire 0 is the most significant digit, so the flat
index order matches ket order ``|a, b>`` and Kronecker factor order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class RegisterShape:
    """Ordered per-wire radices of a register."""

    radices: tuple[int, ...]

    def __init__(self, radices: Iterable[int]):
        radices = tuple(int(r) for r in radices)
        if not radices:
            raise ValueError("a register needs at least one wire")
        if any(r < 2 for r in radices):
            raise ValueError(f"every radix must be >= 2, got {radices}")
        object.__setattr__(self, "radices", radices)

    def __len__(self) -> int:
        return len(self.radices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.radices)

    def __getitem__(self, i):
        return self.radices[i]

    def __add__(self, other: "RegisterShape") -> "RegisterShape":
        return RegisterShape(self.radices + as_shape(other).radices)

    def __repr__(self) -> str:
        return f"RegisterShape({list(self.radices)})"

    @property
    def dimension(self) -> int:
        return prod(self.radices)

    def words(self) -> Iterator[tuple[int, ...]]:
        """All digit words in lexicographic (= flat index) order."""
        return product(*(range(r) for r in self.radices))


def as_shape(shape: RegisterShape | Sequence[int]) -> RegisterShape:
    return shape if isinstance(shape, RegisterShape) else RegisterShape(shape)


def dimension(shape: RegisterShape | Sequence[int]) -> int:
    return as_shape(shape).dimension


def index_to_digits(shape: RegisterShape | Sequence[int], index: int) -> tuple[int, ...]:
    shape = as_shape(shape)
    if not 0 <= index < shape.dimension:
        raise IndexError(f"index {index} out of range for {shape}")
    digits = []
    for r in reversed(shape.radices):
        index, d = divmod(index, r)
        digits.append(d)
    return tuple(reversed(digits))


def digits_to_index(shape: RegisterShape | Sequence[int], digits: Sequence[int]) -> int:
    shape = as_shape(shape)
    if len(digits) != len(shape):
        raise ValueError(f"expected {len(shape)} digits, got {len(digits)}")
    index = 0
    for d, r in zip(digits, shape.radices):
        if not 0 <= d < r:
            raise ValueError(f"digit {d} out of range for radix {r}")
        index = index * r + d
    return index
