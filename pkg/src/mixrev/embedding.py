"""Reversible embedding ``(a, b) -> (a, b + f(a))`` of an arbitrary total function."""
from __future__ import annotations

from dataclasses import dataclass

from .permutation import Permutation, inverse
from .radix import RegisterShape, as_shape, digits_to_index, index_to_digits
from .table import TruthTable


@dataclass(frozen=True)
class EmbeddingReport:
    ancilla_wires: int  # zero-initialised b wires consumed
    garbage_wires: int  # copies of the input a left on the output

    def __str__(self) -> str:
        return f"ancilla={self.ancilla_wires} garbage={self.garbage_wires}"


def _add(b, y, radices, sign=1):
    return tuple((bi + sign * yi) % r for bi, yi, r in zip(b, y, radices))


def embed(f: TruthTable) -> tuple[Permutation, EmbeddingReport]:
    """Embed ``f`` as a permutation of ``f.input_shape + f.output_shape``.

    Addition on the b wires is per-wire modulo that wire's radix, which is
    XOR on binary wires.
    """
    n_in = len(f.input_shape)
    combined = f.input_shape + f.output_shape
    out_radices = f.output_shape.radices
    images = []
    for word in combined.words():
        a, b = word[:n_in], word[n_in:]
        images.append(digits_to_index(combined, a + _add(b, f(*a), out_radices)))
    report = EmbeddingReport(ancilla_wires=len(f.output_shape), garbage_wires=n_in)
    return Permutation(images), report


def restrict(
    g: Permutation,
    input_shape: RegisterShape | list[int],
    output_shape: RegisterShape | list[int],
) -> TruthTable:
    """Read ``a -> b'`` off ``g(a, 0)``."""
    input_shape, output_shape = as_shape(input_shape), as_shape(output_shape)
    combined = input_shape + output_shape
    if len(g) != combined.dimension:
        raise ValueError(f"permutation on {len(g)} states does not fit {combined}")
    zeros = (0,) * len(output_shape)
    entries = []
    for a in input_shape.words():
        out = index_to_digits(combined, g(digits_to_index(combined, a + zeros)))
        entries.append(out[len(input_shape):])
    return TruthTable(input_shape, output_shape, tuple(entries))


def un_embed_check(g: Permutation, f: TruthTable) -> bool:
    """True iff ``inverse(g)`` maps every ``(a, b)`` to ``(a, b - f(a))``."""
    combined = f.input_shape + f.output_shape
    if len(g) != combined.dimension:
        return False
    n_in = len(f.input_shape)
    g_inv = inverse(g)
    for i, word in enumerate(combined.words()):
        a, b = word[:n_in], word[n_in:]
        want = a + _add(b, f(*a), f.output_shape.radices, sign=-1)
        if index_to_digits(combined, g_inv(i)) != want:
            return False
    return True
