"""The generalized Pascal triangle P_b(m, n) = C(rep_b(m), rep_b(n))."""

from __future__ import annotations

import csv
import io

import numpy as np

from .words import DomainError, check_base, count_canonical_subwords, rep, word_binomial


def triangle_entry(b: int, m: int, n: int) -> int:
    b = check_base(b)
    if m < 0 or n < 0:
        raise DomainError("indices must be non-negative")
    if n > m:
        return 0
    return word_binomial(rep(b, m), rep(b, n))


def triangle_row(b: int, m: int) -> list[int]:
    """Entries P_b(m, 0..m); everything to the right vanishes."""
    b = check_base(b)
    u = rep(b, m)
    return [word_binomial(u, rep(b, n)) for n in range(m + 1)]


def row_positive_count(b: int, m: int) -> int:
    """Number of positive entries on row m, counted directly from the row."""
    return sum(1 for x in triangle_row(b, m) if x > 0)


def triangle_matrix(b: int, rows: int) -> np.ndarray:
    """rows x rows array of entries (object dtype, exact integers)."""
    b = check_base(b)
    if rows < 1:
        raise DomainError("rows must be >= 1")
    out = np.zeros((rows, rows), dtype=object)
    for m in range(rows):
        out[m, : m + 1] = triangle_row(b, m)
    return out


def gray_levels(values: np.ndarray, cap: int = 2) -> np.ndarray:
    """0 -> 255 (white), v >= cap -> 0 (black), 1..cap-1 evenly in between."""
    if cap < 1:
        raise DomainError("cap must be >= 1")
    v = np.minimum(values, cap).astype(np.int64)
    return (255 - np.rint(255 * v / cap)).astype(np.uint8)


def render_triangle(b: int, rows: int, cap: int = 2) -> bytes:
    """Binary PGM (P5), one pixel per cell, row m top to bottom, column n left to right."""
    pix = gray_levels(triangle_matrix(b, rows), cap)
    header = f"P5\n{rows} {rows}\n255\n".encode("ascii")
    return header + pix.tobytes()


def read_pgm(data: bytes) -> np.ndarray:
    """Parse the P5 images written by :func:`render_triangle`."""
    magic, dims, maxval, rest = data.split(b"\n", 3)
    if magic != b"P5" or maxval != b"255":
        raise DomainError("not an 8-bit binary graymap")
    w, h = (int(t) for t in dims.split())
    return np.frombuffer(rest, dtype=np.uint8, count=w * h).reshape(h, w)


def compressed_profile(b: int, rows: int) -> list[int]:
    """Positive-entry count of each row m < rows (the compressed triangle).

    Row m has exactly S_b(m) positive entries, so the counts come from the
    subword counter instead of materialising the rows.
    """
    b = check_base(b)
    if rows < 1:
        raise DomainError("rows must be >= 1")
    return [count_canonical_subwords(b, rep(b, m)) for m in range(rows)]


def profile_to_csv(profile: list[int]) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["m", "count"])
    wr.writerows(enumerate(profile))
    return buf.getvalue()


__all__ = [
    "compressed_profile",
    "gray_levels",
    "profile_to_csv",
    "read_pgm",
    "render_triangle",
    "row_positive_count",
    "triangle_entry",
    "triangle_matrix",
    "triangle_row",
]
