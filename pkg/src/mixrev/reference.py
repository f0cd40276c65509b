"""Hand-transcribed reference tables, kept separate from the constructions they check.

Two-wire gate tables are ``{(a, b): (a', b')}``; binary logic tables are
3x3 grids indexed ``[a][b]``. Lukasiewicz tables use 2 for the unknown value.
"""

AND23 = {
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (1, 2),
    (1, 0): (0, 2), (1, 1): (1, 0), (1, 2): (1, 1),
}
OR23 = {
    (0, 0): (0, 0), (0, 1): (1, 1), (0, 2): (0, 2),
    (1, 0): (1, 2), (1, 1): (1, 0), (1, 2): (0, 1),
}

CYCLIC_AND = ((0, 0, 2), (0, 1, 1), (2, 1, 2))
CYCLIC_OR = ((0, 1, 0), (1, 1, 2), (0, 2, 2))

# printed row/column order 0, 1, x coincides with digit order once x = 2
LUKASIEWICZ_AND = ((0, 0, 0), (0, 1, 2), (0, 2, 2))
LUKASIEWICZ_OR = ((0, 1, 2), (1, 1, 1), (2, 1, 2))

AND_C = {
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (2, 2),
    (1, 0): (0, 2), (1, 1): (1, 0), (1, 2): (1, 1),
    (2, 0): (2, 1), (2, 1): (1, 2), (2, 2): (2, 0),
}
OR_C = {
    (0, 0): (0, 0), (0, 1): (1, 1), (0, 2): (0, 2),
    (1, 0): (1, 2), (1, 1): (1, 0), (1, 2): (2, 1),
    (2, 0): (0, 1), (2, 1): (2, 2), (2, 2): (2, 0),
}

X3_MATRIX = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
X3_INV_MATRIX = ((0, 1, 0), (0, 0, 1), (1, 0, 0))
