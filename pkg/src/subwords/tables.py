"""Published reference values, kept as fixtures for the verification suite.

Pattern tables are keyed by symbolic words.  In a pattern, ``0`` is the
digit 0, ``B`` is the digit b - 1, and the letters x, y, z, t are variables
standing for pairwise distinct digits from a range given with each table.
Nothing here is used to compute anything; the library derives every value
independently and these tables only serve as checks.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

S3_PREFIX = (1, 2, 2, 3, 3, 4, 3, 4, 3, 4, 5, 6, 5, 4, 6, 7, 7, 6, 4, 6, 5, 7,
             6, 7, 5, 6, 4, 5, 7, 8, 8, 7, 10)
A3_PREFIX = (0, 1, 3, 5, 8, 11, 15, 18, 22, 25, 29, 34, 40, 45, 49, 55)
A3_150 = 1665
DECOMPOSITION_3_150 = (4, 32, 82, -45)

COEFFS_B3 = {
    "a": (-1, -2, 3, -2, -1, 3, 8, 8, 9),
    "c0": (2, 2, 1, 1, 0, -1, -1, -2, -2),
    "c1": (0, 1, -1, 2, 2, 1, -2, -1, -2),
}
COEFFS_B2 = {"a": (-1, 1, 4, 5), "c0": (2, 1, -1, -2)}

MU3 = (
    ((0, 1, 0), (-1, 2, 0), (-2, 2, 1)),
    ((0, 0, 1), (-2, 1, 2), (-1, 0, 2)),
    ((5, -1, -1), (8, -1, -2), (8, -2, -1)),
)

# S_b(n) for n < b^3 by the shape of rep_b(n); x, y, z in 1..b-1.
S_INITIAL = {
    "": 1, "x": 2, "x0": 3, "xx": 3, "xy": 4, "x00": 4, "x0x": 5, "x0y": 6,
    "xx0": 5, "xxx": 4, "xxy": 6, "xy0": 7, "xyx": 7, "xyy": 6, "xyz": 8,
}

# a_r and c_{r,0} by the shape of rep_b(r); x, y in 1..b-2.
A_R: dict[str, Callable[[int], int]] = {
    "": lambda b: -1, "x": lambda b: -2, "B": lambda b: 2 * b - 3,
    "x0": lambda b: -2, "B0": lambda b: 4 * b - 4, "xx": lambda b: -1,
    "BB": lambda b: 4 * b - 3, "xy": lambda b: -2, "Bx": lambda b: 4 * b - 4,
    "xB": lambda b: 2 * b - 3,
}
C_R0 = {
    "": 2, "x": 2, "B": 1, "x0": 1, "B0": -1, "xx": 0, "BB": -2, "xy": 0,
    "Bx": -2, "xB": -1,
}
# c_{r,s}, 1 <= s <= b-2, by the shape of rep_b(r) followed by s; x, y, z in 1..b-2.
C_RS = {
    "z": 0, "xx": 1, "xz": 0, "Bz": -1, "x0x": 2, "x0z": 0, "B0z": -2,
    "xxx": 2, "xxz": 0, "BBz": -2, "xyx": 2, "xyy": 1, "xyz": 0,
    "xBx": 1, "xBz": -1, "Bxx": -1, "Bxz": -2,
}

# S_b(n b^2 + r) for b <= n < b^2, by the shape of rep_b(n) and rep_b(r)
# (r written with two digits); x, y, z, t in 1..b-1.
_R_SHAPES_2 = ("", "x", "y", "x0", "y0", "xx", "yy", "xy", "yx", "yz")
S_BLOCK = {
    "x0": dict(zip(_R_SHAPES_2, (5, 7, 8, 8, 10, 7, 9, 10, 11, 12))),
    "xx": dict(zip(_R_SHAPES_2, (7, 8, 10, 7, 11, 5, 9, 8, 10, 12))),
    "xy": dict(zip(
        ("", "x", "y", "z", "x0", "y0", "z0", "xx", "yy", "zz", "xy", "xz", "yx", "yz", "zx", "zy", "zt"),
        (10, 13, 12, 14, 13, 11, 15, 10, 8, 12, 12, 14, 11, 12, 15, 14, 16),
    )),
}


def matches(pattern: str, word: Sequence[int], b: int, var_digits: Iterable[int]) -> bool:
    """Does ``word`` have the shape ``pattern``?  Variables bind injectively."""
    if len(pattern) != len(word):
        return False
    allowed = set(var_digits)
    bound: dict[str, int] = {}
    for p, d in zip(pattern, word):
        if p == "0":
            ok = d == 0
        elif p == "B":
            ok = d == b - 1
        elif p in bound:
            ok = bound[p] == d
        else:
            ok = d in allowed and d not in bound.values()
            bound[p] = d
        if not ok:
            return False
    return True


def classify(patterns: Iterable[str], word: Sequence[int], b: int, var_digits: Iterable[int]) -> list[str]:
    var_digits = list(var_digits)
    return [p for p in patterns if matches(p, word, b, var_digits)]


def pad_shape(shape: str) -> str:
    """Two-digit form of a shape of r < b^2 (leading zeros written out)."""
    return "0" * (2 - len(shape)) + shape
