from math import comb

import numpy as np
import pytest

from subwords.pascal import (
    compressed_profile,
    gray_levels,
    profile_to_csv,
    read_pgm,
    render_triangle,
    row_positive_count,
    triangle_entry,
    triangle_matrix,
)
from subwords.regular import s_oracle
from subwords.words import DomainError, val


def test_entry_examples():
    assert triangle_entry(3, 16, 5) == 1
    assert all(triangle_entry(4, m, m) == 1 for m in range(50))
    assert all(triangle_entry(4, m, 0) == 1 for m in range(50))


def test_row_count_examples():
    assert row_positive_count(3, 16) == 7
    assert row_positive_count(5, 0) == 1
    assert row_positive_count(3, 11) == 6


def test_lower_triangular():
    t = triangle_matrix(3, 40)
    assert all(t[m, n] == 0 for m in range(40) for n in range(m + 1, 40))
    assert all(t[m, m] == 1 for m in range(40))
    assert triangle_entry(3, 5, 6) == 0


@pytest.mark.parametrize("b", [2, 3])
def test_rows_count_s(b):
    assert all(row_positive_count(b, m) == s_oracle(b, m) for m in range(b**4))


@pytest.mark.parametrize("b", [2, 4])
def test_embedded_binomials(b):
    for a in range(1, b):
        for m in range(13):
            for k in range(m + 1):
                assert triangle_entry(b, val(b, (a,) * m), val(b, (a,) * k)) == comb(m, k)


def test_profile_examples():
    assert compressed_profile(3, 12) == [1, 2, 2, 3, 3, 4, 3, 4, 3, 4, 5, 6]
    assert compressed_profile(6, 1) == [1]
    assert compressed_profile(2, 16) == [s_oracle(2, m) for m in range(16)]
    with pytest.raises(DomainError):
        compressed_profile(3, 0)


def test_profile_csv():
    assert profile_to_csv([1, 2, 2]) == "m,count\n0,1\n1,2\n2,2\n"


def test_render_three_tones():
    data = render_triangle(3, 27)
    assert data.startswith(b"P5\n27 27\n255\n")
    img = read_pgm(data)
    t = triangle_matrix(3, 27)
    assert img.shape == (27, 27)
    assert set(np.unique(img)) == {0, 127, 255}
    assert ((img == 255) == (t == 0)).all()
    assert ((img == 127) == (t == 1)).all()
    assert ((img == 0) == (t >= 2)).all()


def test_render_single_row():
    assert render_triangle(4, 1) == b"P5\n1 1\n255\n\x7f"
    assert read_pgm(render_triangle(4, 1, cap=1)).tolist() == [[0]]


def test_render_threshold_base2():
    img = read_pgm(render_triangle(2, 32, cap=1))
    assert set(np.unique(img)) == {0, 255}
    assert [(row == 0).sum() for row in img] == [s_oracle(2, m) for m in range(32)]


def test_render_deterministic():
    assert render_triangle(3, 20) == render_triangle(3, 20)


def test_gray_levels():
    v = np.array([0, 1, 2, 3, 9])
    assert gray_levels(v, cap=3).tolist() == [255, 170, 85, 0, 0]
    with pytest.raises(DomainError):
        gray_levels(v, cap=0)
