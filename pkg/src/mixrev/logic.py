"""Irreversible ternary logic: cyclic (rock-paper-scissors) and Lukasiewicz.

Ternary values are digits 0, 1, 2. For the Lukasiewicz tables the third
value "unknown" (x, sometimes written 1/2) is encoded as 2.
"""
from __future__ import annotations

UNKNOWN = 2

# a -> b means a precedes b in the cyclic relation 0 < 1 < 2 < 0.
_CYCLIC_SUCCESSOR = {0: 1, 1: 2, 2: 0}
# rank in the linear order 0 < x < 1
_LUKASIEWICZ_RANK = {0: 0, UNKNOWN: 1, 1: 2}


def _check(*values: int) -> None:
    for v in values:
        if v not in (0, 1, 2):
            raise ValueError(f"ternary value expected, got {v!r}")


def cyclic_precedes(a: int, b: int) -> bool:
    """Nontransitive relation with 0 < 1, 1 < 2 and 2 < 0; distinct values only."""
    _check(a, b)
    if a == b:
        raise ValueError("cyclic precedence is only defined between distinct values")
    return _CYCLIC_SUCCESSOR[a] == b


def cyclic_and(a: int, b: int) -> int:
    """The previous-or-same of ``a`` and ``b``."""
    _check(a, b)
    if a == b:
        return a
    return a if cyclic_precedes(a, b) else b


def cyclic_or(a: int, b: int) -> int:
    """The next-or-same of ``a`` and ``b``."""
    _check(a, b)
    if a == b:
        return a
    return a if cyclic_precedes(b, a) else b


def lukasiewicz_and(a: int, b: int) -> int:
    _check(a, b)
    return min(a, b, key=_LUKASIEWICZ_RANK.__getitem__)


def lukasiewicz_or(a: int, b: int) -> int:
    _check(a, b)
    return max(a, b, key=_LUKASIEWICZ_RANK.__getitem__)


def ternary_not(a: int) -> int:
    _check(a)
    return (1 - a) % 3
