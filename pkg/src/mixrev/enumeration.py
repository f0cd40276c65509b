"""Exhaustive searches over reversible extensions of Boolean AND / OR.

An *extension* of a Boolean gate is a permutation of an ambient two-wire
register whose first output digit, restricted to inputs in {0,1} x {0,1},
equals the Boolean gate. All result lists are sorted lexicographically
(tables row-major, permutations by image list) so output is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, perm
from typing import Callable, Iterator, Literal

from .logic import cyclic_and, cyclic_or
from .permutation import Permutation, is_balanced_component
from .radix import RegisterShape, as_shape
from .table import TruthTable

BOOLEAN_CORNER = ((0, 0), (0, 1), (1, 0), (1, 1))

_BASES: dict[str, Callable[[int, int], int]] = {
    "AND": lambda a, b: a & b,
    "OR": lambda a, b: a | b,
}


def base_table(name: str) -> TruthTable:
    """The Boolean gate ``name`` ("AND" or "OR") as a [2,2] -> [2] table."""
    try:
        fn = _BASES[name.upper()]
    except KeyError:
        raise ValueError(f"base must be AND or OR, got {name!r}") from None
    return TruthTable.from_function([2, 2], [2], fn)


@dataclass(frozen=True)
class ExtensionQuery:
    base: TruthTable
    ambient_shape: RegisterShape = RegisterShape([3, 3])
    component: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ambient_shape", as_shape(self.ambient_shape))
        if self.base.input_shape != RegisterShape([2, 2]):
            raise ValueError("base must be a two-bit table")
        if len(self.ambient_shape) != 2 or min(self.ambient_shape) < 2:
            raise ValueError("ambient register must have two wires")

    def corner(self) -> dict[int, int]:
        """Flat ambient index -> required value of the constrained component."""
        r = self.ambient_shape[1]
        return {a * r + b: self.base(a, b)[0] for a, b in BOOLEAN_CORNER}


def enumerate_balanced_f1(base: TruthTable, radix: int = 3) -> list[TruthTable]:
    """Balanced ``radix x radix`` single-output tables agreeing with ``base`` on the corner."""
    corner = ExtensionQuery(base, [radix, radix]).corner()
    free = [i for i in range(radix * radix) if i not in corner]
    shape, out = RegisterShape([radix, radix]), RegisterShape([radix])
    found = []
    for fill in product(range(radix), repeat=len(free)):
        values = [0] * (radix * radix)
        for i, v in corner.items():
            values[i] = v
        for i, v in zip(free, fill):
            values[i] = v
        t = TruthTable(shape, out, tuple((v,) for v in values))
        if is_balanced_component(t, 0):
            found.append(t)
    return sorted(found, key=lambda t: t.values())


def filter_symmetric(tables: list[TruthTable]) -> list[TruthTable]:
    return [t for t in tables if t.is_symmetric()]


def _classes(f1: TruthTable) -> list[list[int]]:
    radix = f1.output_shape[0]
    classes: list[list[int]] = [[] for _ in range(radix)]
    for i, v in enumerate(f1.values()):
        classes[v].append(i)
    return classes


def count_f2_completions(f1: TruthTable) -> int:
    """Number of ``f2`` making ``(a, b) -> (f1, f2)`` a bijection.

    ``f2`` must be injective on each preimage class of ``f1``; a class larger
    than the radix has no injective filling, so unbalanced ``f1`` gives 0.
    """
    radix = f1.output_shape[0]
    classes = _classes(f1)
    if any(len(c) != f1.input_shape.dimension // radix for c in classes):
        return 0
    total = 1
    for c in classes:
        total *= perm(radix, len(c))
    return total


def _completions(f1: TruthTable) -> Iterator[Permutation]:
    radix = f1.output_shape[0]
    classes = _classes(f1)
    n = f1.input_shape.dimension
    for fills in product(*(permutations(range(radix), len(c)) for c in classes)):
        images = [0] * n
        for v, (cls, fill) in enumerate(zip(classes, fills)):
            for i, f2 in zip(cls, fill):
                images[i] = v * radix + f2
        yield Permutation(images)


def _full_scan(q: ExtensionQuery) -> list[Permutation]:
    n = q.ambient_shape.dimension
    r = q.ambient_shape[1]
    corner = q.corner()
    items = list(corner.items())
    return [
        Permutation(p)
        for p in permutations(range(n))
        if all(p[i] // r == v for i, v in items)
    ]


def enumerate_extensions(q: ExtensionQuery, full_scan: bool = False) -> list[Permutation]:
    """All extensions over the ternary [3, 3] register.

    The default walks balanced first components times class-wise second
    components; ``full_scan=True`` instead filters all ``9!`` permutations
    and exists to cross-check the structured search.
    """
    if q.ambient_shape != RegisterShape([3, 3]):
        raise ValueError("enumerate_extensions searches the [3, 3] register only")
    if full_scan:
        return _full_scan(q)
    found = [p for f1 in enumerate_balanced_f1(q.base) for p in _completions(f1)]
    return sorted(found)


def enumerate_extensions_23(base: TruthTable) -> list[Permutation]:
    """All extensions over the [2, 3] register (binary first wire), by full scan."""
    return _full_scan(ExtensionQuery(base, [2, 3]))


def relabeled_subtraction_extensions(
    base: TruthTable,
) -> list[tuple[Permutation, tuple[int, ...]]]:
    """[2, 3] extensions whose b output is ``sigma((b - a) mod 3)`` for one relabeling sigma.

    Returns ``(permutation, sigma)`` pairs, sigma given as its image tuple.
    """
    shape = RegisterShape([2, 3])
    out = []
    for p in enumerate_extensions_23(base):
        for sigma in permutations(range(3)):
            if all(
                p(a * 3 + b) % 3 == sigma[(b - a) % 3] for a, b in shape.words()
            ):
                out.append((p, sigma))
    return out


Law = Literal["associativity", "distributivity"]
_DUAL = {cyclic_and: cyclic_or, cyclic_or: cyclic_and}


def find_law_counterexamples(
    op: Callable[[int, int], int],
    law: Law,
    values: tuple[int, ...] = (0, 1, 2),
    other: Callable[[int, int], int] | None = None,
) -> list[tuple[int, int, int]]:
    """Every ``(a, b, c)`` over ``values`` violating ``law`` for ``op``.

    Distributivity is ``op`` over ``other`` (default: the dual cyclic operation):
    ``op(a, other(b, c)) == other(op(a, b), op(a, c))``.
    """
    if law == "associativity":
        def holds(a, b, c):
            return op(op(a, b), c) == op(a, op(b, c))
    elif law == "distributivity":
        dual = other if other is not None else _DUAL[op]

        def holds(a, b, c):
            return op(a, dual(b, c)) == dual(op(a, b), op(a, c))
    else:
        raise ValueError(f"unknown law {law!r}")
    return [t for t in product(values, repeat=3) if not holds(*t)]


def with_few_values(triples: list[tuple[int, int, int]]) -> list[tuple[int, int, int]]:
    """Triples using at most two distinct values.

    Violations of that kind would go beyond the claim that the laws only fail
    once three different values are involved.
    """
    return [t for t in triples if len(set(t)) <= 2]


def total_permutations(ambient: RegisterShape) -> int:
    return factorial(as_shape(ambient).dimension)
