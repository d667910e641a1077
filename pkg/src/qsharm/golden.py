"""Golden reference values for |m| = 0, 1/2, ..., 11/2 and i = 0..5.

These 72 polynomials and 72 normalization integrals are the fixed
ground truth the verification suites compare against.  Keys are
(2|m|, i) with the doubled order as an integer.  Polynomials are dense
integer coefficient lists (lowest power first) in the shared
integer-family normalization; norms are (rational string, pi exponent).
"""

from __future__ import annotations

from fractions import Fraction

from .numerics import PiScaled

TABLE_TWO_M_MAX = 11
TABLE_I_MAX = 5

# Polynomial factors by (2|m|, i); the full function carries an extra
# (1-x^2)^(|m|/2) prefactor.
TABLE_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {}

_POLY_ROWS = {
    0:  ([1], [0, 1], [1, 0, -3],  [0, 3, 0, -5],  [3, 0, -30, 0, 35],  [0, 15, 0, -70, 0, 63]),
    1:  ([1], [0, 1], [1, 0, -4],  [0, 3, 0, -6],  [3, 0, -36, 0, 48],  [0, 15, 0, -80, 0, 80]),
    2:  ([1], [0, 1], [1, 0, -5],  [0, 3, 0, -7],  [3, 0, -42, 0, 63],  [0, 15, 0, -90, 0, 99]),
    3:  ([1], [0, 1], [1, 0, -6],  [0, 3, 0, -8],  [3, 0, -48, 0, 80],  [0, 15, 0, -100, 0, 120]),
    4:  ([1], [0, 1], [1, 0, -7],  [0, 3, 0, -9],  [3, 0, -54, 0, 99],  [0, 15, 0, -110, 0, 143]),
    5:  ([1], [0, 1], [1, 0, -8],  [0, 3, 0, -10], [3, 0, -60, 0, 120], [0, 15, 0, -120, 0, 168]),
    6:  ([1], [0, 1], [1, 0, -9],  [0, 3, 0, -11], [3, 0, -66, 0, 143], [0, 15, 0, -130, 0, 195]),
    7:  ([1], [0, 1], [1, 0, -10], [0, 3, 0, -12], [3, 0, -72, 0, 168], [0, 15, 0, -140, 0, 224]),
    8:  ([1], [0, 1], [1, 0, -11], [0, 3, 0, -13], [3, 0, -78, 0, 195], [0, 15, 0, -150, 0, 255]),
    9:  ([1], [0, 1], [1, 0, -12], [0, 3, 0, -14], [3, 0, -84, 0, 224], [0, 15, 0, -160, 0, 288]),
    10: ([1], [0, 1], [1, 0, -13], [0, 3, 0, -15], [3, 0, -90, 0, 255], [0, 15, 0, -170, 0, 323]),
    11: ([1], [0, 1], [1, 0, -14], [0, 3, 0, -16], [3, 0, -96, 0, 288], [0, 15, 0, -180, 0, 360]),
}

for _two_m, _row in _POLY_ROWS.items():
    for _i, _coeffs in enumerate(_row):
        TABLE_POLYNOMIALS[(_two_m, _i)] = tuple(_coeffs)

# Squared-norm theta integrals by (2|m|, i): rational for integer |m|,
# rational * pi for half-odd-integer |m|.
_NORM_ROWS = {
    0:  ("2", "2/3", "8/5", "8/7", "128/9", "128/11"),
    1:  ("1/2", "1/8", "1/2", "9/32", "9/2", "25/8"),
    2:  ("4/3", "4/15", "32/21", "32/45", "768/55", "768/91"),
    3:  ("3/8", "1/16", "15/32", "3/16", "35/8", "75/32"),
    4:  ("16/15", "16/105", "64/45", "192/385", "6144/455", "2048/315"),
    5:  ("5/16", "5/128", "7/16", "35/256", "135/32", "945/512"),
    6:  ("32/35", "32/315", "512/385", "512/1365", "4096/315", "20480/3927"),
    7:  ("35/128", "7/256", "105/256", "27/256", "2079/512", "385/256"),
    8:  ("256/315", "256/3465", "1024/819", "1024/3465", "16384/1309", "81920/19019"),
    9:  ("63/256", "21/1024", "99/256", "693/8192", "1001/256", "1287/1024"),
    10: ("512/693", "512/9009", "4096/3465", "4096/17017", "32768/2717", "32768/9009"),
    11: ("231/1024", "33/2048", "3003/8192", "143/2048", "3861/1024", "8775/8192"),
}

TABLE_NORMS: dict[tuple[int, int], PiScaled] = {}

for _two_m, _row in _NORM_ROWS.items():
    for _i, _q in enumerate(_row):
        TABLE_NORMS[(_two_m, _i)] = PiScaled(Fraction(_q), _two_m % 2)


def reference_polynomial(two_m: int, i: int) -> tuple[int, ...]:
    """Golden polynomial coefficients for (2|m|, i) within the table range."""
    return TABLE_POLYNOMIALS[(two_m, i)]


def reference_norm(two_m: int, i: int) -> PiScaled:
    """Golden squared-norm theta integral for (2|m|, i) within the table range."""
    return TABLE_NORMS[(two_m, i)]
