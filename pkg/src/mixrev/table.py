"""Total (possibly irreversible) functions between mixed-radix domains."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .radix import RegisterShape, as_shape, digits_to_index


class FormatError(ValueError):
    """Raised on malformed truth-table or circuit text."""


@dataclass(frozen=True)
class TruthTable:
    """Output digit word for every input digit word, in lexicographic input order."""

    input_shape: RegisterShape
    output_shape: RegisterShape
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "input_shape", as_shape(self.input_shape))
        object.__setattr__(self, "output_shape", as_shape(self.output_shape))
        entries = tuple(tuple(int(d) for d in e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.input_shape.dimension:
            raise ValueError(
                f"table needs {self.input_shape.dimension} entries, got {len(entries)}"
            )
        for e in entries:
            # validates length and digit ranges
            digits_to_index(self.output_shape, e)

    @classmethod
    def from_function(
        cls,
        input_shape: RegisterShape | Sequence[int],
        output_shape: RegisterShape | Sequence[int],
        fn: Callable[..., int | Sequence[int]],
    ) -> "TruthTable":
        """Tabulate ``fn(*digits)``; a scalar result is a one-wire output."""
        input_shape = as_shape(input_shape)
        entries = []
        for word in input_shape.words():
            out = fn(*word)
            entries.append((out,) if isinstance(out, int) else tuple(out))
        return cls(input_shape, as_shape(output_shape), tuple(entries))

    def __call__(self, *digits: int) -> tuple[int, ...]:
        return self.entries[digits_to_index(self.input_shape, digits)]

    def component(self, k: int) -> "TruthTable":
        """Single-output table of output wire ``k``."""
        return TruthTable(
            self.input_shape,
            RegisterShape([self.output_shape[k]]),
            tuple((e[k],) for e in self.entries),
        )

    def values(self, k: int = 0) -> tuple[int, ...]:
        """Flat row-major values of output wire ``k``."""
        return tuple(e[k] for e in self.entries)

    def is_symmetric(self) -> bool:
        if len(self.input_shape) != 2 or self.input_shape[0] != self.input_shape[1]:
            return False
        n = self.input_shape[0]
        return all(self(a, b) == self(b, a) for a in range(n) for b in range(n))

    def to_text(self) -> str:
        lines = [
            "in: " + " ".join(map(str, self.input_shape)),
            "out: " + " ".join(map(str, self.output_shape)),
        ]
        lines += [" ".join(map(str, e)) for e in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TruthTable":
        """Parse the ``in:`` / ``out:`` / one-row-per-input format.

        Blank lines and ``#`` comments are ignored.
        """
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if len(lines) < 2 or not lines[0].startswith("in:") or not lines[1].startswith("out:"):
            raise FormatError("table must start with 'in:' and 'out:' header lines")
        try:
            ins = RegisterShape(int(t) for t in lines[0][3:].split())
            outs = RegisterShape(int(t) for t in lines[1][4:].split())
            rows = [tuple(int(t) for t in ln.split()) for ln in lines[2:]]
            return cls(ins, outs, tuple(rows))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
