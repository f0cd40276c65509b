"""Registry of named, executable checks shared by the CLI and the acceptance tests.

Each check returns ``(passed, detail)``; ``detail`` shows measured values.
"""
from __future__ import annotations

from functools import cache
from typing import Callable

import numpy as np

from . import linalg as la
from . import reference as ref
from .circuit import Circuit, as_matrix, as_permutation, simulate_classical, simulate_quantum
from .embedding import embed, restrict, un_embed_check
from .enumeration import (
    ExtensionQuery,
    base_table,
    count_f2_completions,
    enumerate_balanced_f1,
    enumerate_extensions,
    enumerate_extensions_23,
    filter_symmetric,
    find_law_counterexamples,
    relabeled_subtraction_extensions,
)
from .gates import all_gates, gate
from .logic import (
    cyclic_and,
    cyclic_or,
    lukasiewicz_and,
    lukasiewicz_or,
    ternary_not,
)
from .permutation import (
    Permutation,
    compose,
    inverse,
    is_balanced_component,
    order,
    power,
    to_matrix,
)
from .radix import RegisterShape
from .table import TruthTable

Check = Callable[[], tuple[bool, str]]
CLAIMS: dict[str, Check] = {}


def claim(name: str):
    def register(fn: Check) -> Check:
        CLAIMS[name] = fn
        return fn
    return register


def _grid(fn) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(fn(a, b) for b in range(3)) for a in range(3))


def _gate_matches(name: str, table: dict) -> int:
    g = gate(name)
    return sum(g(*k) == v for k, v in table.items())


def _grid_table(grid) -> TruthTable:
    return TruthTable.from_function([3, 3], [3], lambda a, b: grid[a][b])


@cache
def _extensions(base: str, full_scan: bool = False) -> tuple[Permutation, ...]:
    return tuple(enumerate_extensions(ExtensionQuery(base_table(base)), full_scan=full_scan))


@claim("twotri-tables")
def _twotri() -> tuple[bool, str]:
    n = _gate_matches("AND23", ref.AND23) + _gate_matches("OR23", ref.OR23)
    return n == 12, f"rows={n}/12"


@claim("cyclog-tables")
def _cyclog() -> tuple[bool, str]:
    n = sum(
        _grid(fn)[a][b] == want[a][b]
        for fn, want in ((cyclic_and, ref.CYCLIC_AND), (cyclic_or, ref.CYCLIC_OR))
        for a in range(3) for b in range(3)
    )
    return n == 18, f"cells={n}/18"


@claim("luklog-tables")
def _luklog() -> tuple[bool, str]:
    n = sum(
        _grid(fn)[a][b] == want[a][b]
        for fn, want in ((lukasiewicz_and, ref.LUKASIEWICZ_AND), (lukasiewicz_or, ref.LUKASIEWICZ_OR))
        for a in range(3) for b in range(3)
    )
    return n == 18, f"cells={n}/18"


@claim("tritri-tables")
def _tritri() -> tuple[bool, str]:
    n = _gate_matches("AND_C", ref.AND_C) + _gate_matches("OR_C", ref.OR_C)
    return n == 18, f"rows={n}/18"


@claim("and-decomposition")
def _decomposition() -> tuple[bool, str]:
    ok = True
    for second, target in (("C2_STAR", "AND_C"), ("C1", "OR_C")):
        c = Circuit([3, 3]).append("CX_STAR", [0, 1]).append(second, [0, 1])
        g = gate(target)
        ok &= as_permutation(c) == g.permutation
        ok &= compose(gate(second).permutation, gate("CX_STAR").permutation) == g.permutation
        ok &= bool(np.max(np.abs(as_matrix(c) - g.matrix)) <= 1e-12)
        ok &= bool(np.max(np.abs(gate(second).matrix @ gate("CX_STAR").matrix - g.matrix)) <= 1e-12)
    return ok, "AND_C=C2_STAR*CX_STAR OR_C=C1*CX_STAR"


@claim("twotri-construction")
def _twotri_construction() -> tuple[bool, str]:
    P, I, NOT = la.projector, la.identity, la.NOT
    # b -> b - a (mod 3) with a binary control
    sub = la.conditional(2, [I(3), np.array(ref.X3_INV_MATRIX, dtype=complex)])
    ok = True
    for name, flip_on in (("AND23", 2), ("OR23", 1)):
        flip = la.tensor(I(2), I(3) - P(3, flip_on)) + la.tensor(NOT, P(3, flip_on))
        ok &= np.array_equal(flip @ sub, gate(name).matrix)
    return bool(ok), "AND23/OR23 = controlled-NOT(a) * (b-a mod 3)"


@claim("conditional-cnot")
def _conditional_cnot() -> tuple[bool, str]:
    u = la.conditional(2, [la.identity(2), la.NOT])
    ok = np.array_equal(u, to_matrix(gate("CNOT").permutation))
    return bool(ok), "conditional(2,[I,NOT])=CNOT"


@claim("toffoli-projector")
def _toffoli() -> tuple[bool, str]:
    P, I, NOT, t = la.projector, la.identity, la.NOT, la.tensor
    nested = la.conditional(2, [I(4), la.conditional(2, [I(2), NOT])])
    expansion = t(P(2, 1), P(2, 1), NOT) + t(
        t(P(2, 0), P(2, 0)) + t(P(2, 0), P(2, 1)) + t(P(2, 1), P(2, 0)), I(2)
    )
    m = gate("TOFFOLI").matrix
    ok = np.array_equal(nested, m) and np.array_equal(expansion, m)
    ok &= bool(np.all((m == 0) | (m == 1)))
    return bool(ok), "nested=expansion=TOFFOLI"


@claim("order-7")
def _order7() -> tuple[bool, str]:
    ok, parts = True, []
    for name in ("AND_C", "OR_C"):
        p = gate(name).permutation
        k = order(p)
        parts.append(f"{name}={k}")
        ok &= k == 7 and power(p, 7).is_identity() and power(p, 6) == inverse(p)
        ok &= all(not power(p, j).is_identity() for j in range(1, 7))
    t = gate("TOFFOLI").permutation
    ok &= order(t) == 2 and inverse(t) == t
    return ok, " ".join(parts)


@claim("x3-laws")
def _x3() -> tuple[bool, str]:
    x, xi = gate("X3"), gate("X3_INV")
    ok = order(x.permutation) == 3
    ok &= power(x.permutation, 2) == inverse(x.permutation) == xi.permutation
    ok &= np.array_equal(x.matrix, np.array(ref.X3_MATRIX))
    ok &= np.array_equal(xi.matrix, np.array(ref.X3_INV_MATRIX))
    ok &= np.array_equal(x.matrix @ x.matrix, xi.matrix)
    return bool(ok), f"order={order(x.permutation)}"


@claim("demorgan")
def _demorgan() -> tuple[bool, str]:
    n = sum(
        ternary_not(cyclic_and(a, b)) == cyclic_or(ternary_not(a), ternary_not(b))
        for a in range(3) for b in range(3)
    )
    return n == 9, f"pairs={n}/9"


@claim("law-counterexamples")
def _laws() -> tuple[bool, str]:
    ok, parts = True, []
    for op in (cyclic_and, cyclic_or):
        for law in ("associativity", "distributivity"):
            found = find_law_counterexamples(op, law)
            parts.append(f"{op.__name__}.{law}={len(found)}")
            ok &= bool(found) and all(len(set(t)) == 3 for t in found)
        ok &= not find_law_counterexamples(op, "associativity", values=(0, 1))
    return ok, " ".join(parts)


@claim("luklog-unbalanced")
def _luklog_unbalanced() -> tuple[bool, str]:
    luk = [_grid_table(_grid(f)) for f in (lukasiewicz_and, lukasiewicz_or)]
    ok = not any(is_balanced_component(t, 0) for t in luk)
    ok &= all(count_f2_completions(t) == 0 for t in luk)
    n = 0
    for g in all_gates():
        if len(g.shape) < 2:
            continue
        table = g.table()
        ok &= is_balanced_component(table, 0) and is_balanced_component(table, 1)
        n += 1
    return ok, f"lukasiewicz_balanced=0 gates_balanced={n}"


@claim("count-2160")
def _count2160() -> tuple[bool, str]:
    counts = []
    ok = True
    for base in ("AND", "OR"):
        ext = _extensions(base)
        counts.append(len(ext))
        ok &= ext == _extensions(base, full_scan=True)
        ok &= sum(count_f2_completions(f) for f in enumerate_balanced_f1(base_table(base))) == len(ext)
    ok &= counts == [2160, 2160]
    got = counts[0] if counts[0] == counts[1] else "/".join(map(str, counts))
    return ok, f"expected=2160 got={got}"


@claim("balanced-10")
def _balanced10() -> tuple[bool, str]:
    counts = [len(enumerate_balanced_f1(base_table(b))) for b in ("AND", "OR")]
    return counts == [10, 10], f"AND={counts[0]} OR={counts[1]}"


@claim("symmetric-2")
def _symmetric2() -> tuple[bool, str]:
    ok, parts = True, []
    for base, grid in (("AND", ref.CYCLIC_AND), ("OR", ref.CYCLIC_OR)):
        sym = filter_symmetric(enumerate_balanced_f1(base_table(base)))
        parts.append(f"{base}={len(sym)}")
        ok &= len(sym) == 2 and _grid_table(grid) in sym
    return ok, " ".join(parts)


@claim("extensions-23")
def _ext23() -> tuple[bool, str]:
    ok, parts = True, []
    for base, name in (("AND", "AND23"), ("OR", "OR23")):
        ext = enumerate_extensions_23(base_table(base))
        relabeled = relabeled_subtraction_extensions(base_table(base))
        ok &= gate(name).permutation in ext and len(relabeled) == 6
        ok &= gate(name).permutation in [p for p, _ in relabeled]
        parts.append(f"{base}:all={len(ext)},relabeled={len(relabeled)}")
    return ok, " ".join(parts)


@claim("fanout")
def _fanout() -> tuple[bool, str]:
    ok = all(gate("OR_C")(0, b) == (b, b) for b in (0, 1))
    for name in ("AND_C", "OR_C"):
        inv = gate(name).inverse()
        ok &= all(inv(a, 0) == (a, a) for a in range(3))
    return ok, "binary=OR_C(0,b) ternary=AND_C^-1(a,0),OR_C^-1(a,0)"


@claim("embed-roundtrip")
def _embed() -> tuple[bool, str]:
    from itertools import product

    n = 0
    ok = True
    cases = [TruthTable([2, 2], [2], tuple((v,) for v in vals)) for vals in product(range(2), repeat=4)]
    cases += [TruthTable([3], [3], tuple((v,) for v in vals)) for vals in product(range(3), repeat=3)]
    for f in cases:
        g, report = embed(f)
        ok &= restrict(g, f.input_shape, f.output_shape) == f
        ok &= compose(inverse(g), g).is_identity() and un_embed_check(g, f)
        ok &= report.ancilla_wires == len(f.output_shape) and report.garbage_wires == len(f.input_shape)
        n += 1
    g_and, _ = embed(base_table("AND"))
    ok &= g_and == gate("TOFFOLI").permutation
    g_id, _ = embed(TruthTable([2], [2], ((0,), (1,))))
    ok &= g_id == gate("CNOT").permutation
    return ok, f"functions={n}"


@claim("quantum-classical-agreement")
def _agreement() -> tuple[bool, str]:
    ok, n = True, 0
    for g in all_gates():
        ok &= la.is_unitary(g.matrix, 1e-12)
        c = Circuit(g.shape).append(g, range(len(g.shape)))
        for word in g.shape.words():
            out = simulate_quantum(c, la.StateVector.basis(g.shape, word))
            want = la.StateVector.basis(g.shape, simulate_classical(c, word))
            ok &= bool(np.max(np.abs(out.amplitudes - want.amplitudes)) <= 1e-12)
            n += 1
    return ok, f"basis_inputs={n}"


@claim("not-path")
def _not_path() -> tuple[bool, str]:
    ok = np.max(np.abs(la.not_path(0) - la.identity(2))) <= 1e-12
    ok &= np.max(np.abs(la.not_path(1) - la.NOT)) <= 1e-12
    zero = la.StateVector.basis([2], [0])
    for t in np.linspace(0, 1, 20):
        u = la.not_path(float(t))
        ok &= la.is_unitary(u) and abs(abs(np.linalg.det(u)) - 1) <= 1e-12
        ok &= abs(np.linalg.norm(la.apply(u, zero).amplitudes) - 1) <= 1e-12
    return bool(ok), "samples=20"


def run_claim(name: str) -> tuple[bool, str]:
    try:
        check = CLAIMS[name]
    except KeyError:
        raise KeyError(f"unknown claim {name!r}") from None
    return check()


def report_line(name: str) -> tuple[bool, str]:
    ok, detail = run_claim(name)
    return ok, f"{'PASS' if ok else 'FAIL'} {name} {detail}"
