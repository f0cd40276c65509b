"""Classical reversible gates as permutations of flat state indices.

Composition convention: ``compose(p, q)(i) == p(q(i))``, i.e. ``q`` acts
first. This matches operator products, where ``C2 @ CX`` means "CX, then C2".
"""
from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .table import TruthTable


class Permutation:
    """A bijection on ``{0, ..., N-1}`` stored as its image list."""

    __slots__ = ("_map",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        n = len(images)
        seen = [False] * n
        for j in images:
            if not 0 <= j < n:
                raise ValueError(f"image {j} out of range for {n} states")
            if seen[j]:
                raise ValueError(f"duplicate image {j}: not a bijection")
            seen[j] = True
        self._map = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @property
    def mapping(self) -> tuple[int, ...]:
        return self._map

    def __len__(self) -> int:
        return len(self._map)

    def __call__(self, i: int) -> int:
        return self._map[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._map == other._map

    def __lt__(self, other: "Permutation") -> bool:
        return self._map < other._map

    def __hash__(self) -> int:
        return hash(self._map)

    def __repr__(self) -> str:
        return f"Permutation({list(self._map)})"

    def __matmul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._map))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, each cycle starting at its smallest element."""
        seen = [False] * len(self._map)
        out = []
        for start in range(len(self._map)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self._map[i]
            out.append(tuple(cyc))
        return out


def from_mapping(images: Sequence[int]) -> Permutation:
    return Permutation(images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``."""
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    pm = p.mapping
    return Permutation(pm[j] for j in q.mapping)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p.mapping):
        inv[j] = i
    return Permutation(inv)


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = Permutation.identity(len(p))
    base = p
    while k:
        if k & 1:
            result = compose(base, result)
        base = compose(base, base)
        k >>= 1
    return result


def order(p: Permutation) -> int:
    return lcm(*(len(c) for c in p.cycles()))


def to_matrix(p: Permutation) -> np.ndarray:
    """0/1 matrix with ``M[p(i), i] = 1``, so ``M @ e_i == e_{p(i)}``."""
    n = len(p)
    m = np.zeros((n, n), dtype=complex)
    m[list(p.mapping), np.arange(n)] = 1
    return m


def is_balanced_component(table: TruthTable, component: int) -> bool:
    """True iff every value of output wire ``component`` has equally many preimages.

    A two-wire reversible gate on ``[R, R]`` has each component value hit
    exactly ``R`` times; this is necessary for ``table`` to be a gate component.
    """
    if component not in (0, 1):
        raise ValueError(f"component must be 0 or 1, got {component}")
    if component >= len(table.output_shape):
        raise ValueError(f"table has no output component {component}")
    radix = table.output_shape[component]
    n = table.input_shape.dimension
    if n % radix:
        return False
    counts = [0] * radix
    for v in table.values(component):
        counts[v] += 1
    return all(c == n // radix for c in counts)


def as_table(p: Permutation, shape) -> TruthTable:
    """The digit-level table ``word -> word`` that ``p`` induces on ``shape``."""
    from .radix import as_shape, index_to_digits

    shape = as_shape(shape)
    if len(p) != shape.dimension:
        raise ValueError(f"permutation on {len(p)} states does not fit {shape}")
    return TruthTable(shape, shape, tuple(index_to_digits(shape, j) for j in p.mapping))


def from_table(table: TruthTable) -> Permutation:
    """Permutation of a square (input shape == output shape) bijective table."""
    from .radix import digits_to_index

    if table.input_shape != table.output_shape:
        raise ValueError("a permutation needs identical input and output shapes")
    return Permutation(digits_to_index(table.output_shape, e) for e in table.entries)
