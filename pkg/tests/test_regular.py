import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from subwords import tables
from subwords.regular import (
    build_linear_representation,
    coefficients_from_json,
    coefficients_to_json,
    lemma_matrix,
    lemma_matrix_inverse,
    palindrome_check,
    palindrome_word_check,
    redundancy_witness,
    s_fast,
    s_fast_batch,
    s_oracle,
    s_recurrence,
    s_recurrence_batch,
    solve_coefficients,
    verify_regularity,
)
from subwords.verify import (
    check_block_values,
    check_coefficient_tables,
    check_initial_values,
    check_kernel_closure,
    table_s,
)
from subwords.words import DomainError, words_of_length


def test_oracle_examples():
    assert s_oracle(3, 16) == 7
    assert s_oracle(4, 0) == 1
    assert [s_oracle(3, n) for n in range(18)] == list(tables.S3_PREFIX[:18])


def test_recurrence_examples():
    assert s_recurrence(3, 11) == s_oracle(3, 5) + s_oracle(3, 2) == 6
    assert s_recurrence(5, 0) == 1
    assert all(s_recurrence(3, n) == s_oracle(3, n) for n in range(3**7))


def test_coefficients_base3():
    c = solve_coefficients(3)
    assert c.a == (-1, -2, 3, -2, -1, 3, 8, 8, 9)
    assert tuple(r[0] for r in c.c) == (2, 2, 1, 1, 0, -1, -1, -2, -2)
    assert tuple(r[1] for r in c.c) == (0, 1, -1, 2, 2, 1, -2, -1, -2)


def test_coefficients_base2():
    c = solve_coefficients(2)
    assert c.a == (-1, 1, 4, 5)
    assert tuple(r[0] for r in c.c) == (2, 1, -1, -2)


def test_coefficients_base5_repeated_digit():
    c = solve_coefficients(5)
    for x in (1, 2, 3):
        r = 5 * x + x
        assert c.a[r] == -1 and c.c[r][0] == 0


@pytest.mark.parametrize("b", range(2, 9))
def test_coefficient_shape_tables(b):
    ok, detail = check_coefficient_tables(b)
    assert ok, detail


def test_matrices_base3():
    assert build_linear_representation(3).mu == tables.MU3


def test_matrices_base2():
    lin = build_linear_representation(2)
    assert lin.mu == (((0, 1), (-1, 2)), ((3, -1), (4, -1)))


@pytest.mark.parametrize("b", range(2, 7))
def test_initial_vector(b):
    assert build_linear_representation(b).v0 == (1, 1) + (2,) * (b - 2)


def test_digit_order():
    lin = build_linear_representation(3)
    # rep_3(3) = 10: the least significant digit multiplies first from the left
    v = np.array(lin.selector, dtype=object).dot(lin.matrix(0)).dot(lin.matrix(1)).dot(np.array(lin.v0, dtype=object))
    assert v == 3 == s_fast(3, 3)
    assert s_fast(3, 16) == 7


def test_fast_base2_sweep():
    assert all(s_fast(2, n) == s_oracle(2, n) for n in range(2**16))


@given(st.integers(2, 7), st.integers(0, 10**30))
def test_fast_matches_oracle_large(b, n):
    assert s_fast(b, n) == s_oracle(b, n) == s_recurrence(b, n)


@pytest.mark.parametrize("b", [2, 3, 9])
def test_all_top_digits(b):
    # (b-1)^k has exactly k + 1 canonical subwords
    for k in range(0, 70, 7):
        n = b**k - 1
        assert s_fast(b, n) == k + 1


def test_negative_n():
    with pytest.raises(DomainError):
        s_fast(3, -1)


@pytest.mark.parametrize("b, length", [(2, 14), (3, 8), (5, 5)])
def test_batches_match(b, length):
    w = words_of_length(b, length)
    o = [s_oracle(b, n) for n in range(b ** (length - 1), b**length)]
    assert s_recurrence_batch(b, w).tolist() == o
    assert s_fast_batch(b, w).tolist() == o


@pytest.mark.parametrize("b, n_max", [(3, 3**5), (2, 2**10), (5, 5**4)])
def test_verify_regularity(b, n_max):
    r = verify_regularity(b, n_max)
    assert r.ok, str(r)


def test_redundant_relations_base2():
    r = verify_regularity(2, 2**10)
    # listing S(2n+1), S(4n), S(4n+1), S(4n+2), S(4n+3), the third and fifth
    # (r = 1 and r = 3) follow from the others
    assert {k for k, v in r.redundant.items() if v} == {1, 3}


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_redundancy_witnesses(b):
    c = solve_coefficients(b)
    for s in range(b):
        r = b * s + b - 1
        assert redundancy_witness(c, r) == c.relation(r)
    with pytest.raises(DomainError):
        redundancy_witness(c, 0)


def test_verify_regularity_reports_counterexample():
    c = solve_coefficients(3)
    broken = type(c)(3, (c.a[0] + 1,) + c.a[1:], c.c)
    r = verify_regularity(3, 20, coeffs=broken)
    assert not r.ok and "S(0*9+0)" in r.counterexample


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_kernel_closure(b):
    ok, detail = check_kernel_closure(b, b**3)
    assert ok, detail


@pytest.mark.parametrize("b", range(2, 6))
def test_lemma_matrix_inverse_from_table_values(b):
    m = lemma_matrix(b, table_s(b))
    assert (m.dot(lemma_matrix_inverse(b)) == np.eye(b**3, dtype=object)).all()
    assert (lemma_matrix(b) == m).all()


@pytest.mark.parametrize("b", range(2, 7))
def test_initial_value_table(b):
    ok, detail = check_initial_values(b)
    assert ok, detail


@pytest.mark.parametrize("b", range(3, 7))
def test_block_value_tables(b):
    ok, detail = check_block_values(b)
    assert ok, detail


def test_palindrome_examples():
    assert palindrome_check(3, 4)
    assert palindrome_check(2, 1) and s_oracle(2, 2) == s_oracle(2, 3) == 3
    assert palindrome_check(4, 3)
    with pytest.raises(DomainError):
        palindrome_check(3, 0)


@given(st.sampled_from([2, 3, 4]), st.data())
def test_palindrome_words(b, data):
    u = data.draw(st.lists(st.integers(0, b - 1), max_size=10))
    assert palindrome_word_check(b, u)


def test_no_palindrome_below_top_digit():
    # the symmetry is special to the leading digit b - 1
    lin = build_linear_representation(3)
    vals = [lin.evaluate(3**3 + r) for r in range(3**3)]
    assert vals != vals[::-1]


@pytest.mark.parametrize("b", [2, 3, 7])
def test_json_round_trip(b):
    lin = build_linear_representation(b)
    c = solve_coefficients(b)
    text = coefficients_to_json(lin, c)
    assert '"-1"' in text
    assert coefficients_from_json(text) == (lin, c)
