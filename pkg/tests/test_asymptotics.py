from fractions import Fraction

import mpmath
import pytest

from subwords.asymptotics import (
    convergence_gaps,
    e_index,
    grid_alpha,
    normalized,
    period_end_value,
    phi,
    sample_h,
    scaling_identity_check,
    series_to_csv,
)
from subwords.summatory import a_oracle
from subwords.words import DomainError


def test_e_index_examples():
    assert e_index(3, 3, 0) == 82
    assert e_index(2, 5, Fraction(1, 2)) == 97
    assert e_index(3, 2, mpmath.mpf(0.5)) == 27 + 3 * 4 + 1


@pytest.mark.parametrize("alpha", [-Fraction(1, 10), 2, Fraction(5, 2)])
def test_alpha_domain(alpha):
    with pytest.raises(DomainError):
        e_index(3, 4, alpha)


def test_alpha_domain_base2():
    with pytest.raises(DomainError):
        e_index(2, 4, 1)


def test_phi_small_case_against_oracle():
    s = phi(3, 3, 0)
    assert s.argument == 82
    assert s.numerator == a_oracle(3, 82)
    with mpmath.workprec(300):
        ref = mpmath.mpf(a_oracle(3, 82)) / mpmath.power(5, mpmath.log(82, 3))
        assert abs(s.value - ref) / ref < mpmath.mpf(10) ** -12


def test_normalized_precision():
    # compare the working precision against a much higher one
    m = 3**13 + 12345
    with mpmath.workprec(400):
        ref = normalized(3, m, prec=400)
        assert abs(normalized(3, m) - ref) / ref < mpmath.mpf(10) ** -30


def test_phi_tends_to_one_at_zero():
    devs = [abs(float(phi(3, n, 0).value) - 1) for n in (2, 5, 8, 11)]
    assert devs == sorted(devs, reverse=True)
    assert devs[-1] < 1e-4


def test_grid_alpha_exact_floor():
    a = grid_alpha(3, Fraction(1, 2), 6)
    k = a * 3**6
    assert k.denominator == 1
    # floor(3^6 (sqrt 3 - 1)) = 533
    assert k == 533


def test_sample_h_shape_and_endpoints():
    s = sample_h(3, 10, 64)
    assert len(s) == 64
    assert [x for x, _ in s] == [k / 64 for k in range(64)]
    assert abs(s[0][1] - 1) < 1e-2
    # the fluctuation is not flat over a period
    assert max(v for _, v in s) - min(v for _, v in s) > 0.05


def test_sample_h_bad_args():
    with pytest.raises(DomainError):
        sample_h(3, 5, 1)
    with pytest.raises(DomainError):
        sample_h(3, 0, 8)


def test_convergence_proxy():
    gaps = convergence_gaps(3, range(3, 13), 64)
    g = [gaps[n] for n in range(4, 13)]
    assert all(later <= earlier + 1e-3 for earlier, later in zip(g, g[1:]))
    s3, s6, s12 = (sample_h(3, n, 64) for n in (3, 6, 12))
    gap_12_6 = max(abs(a[1] - b[1]) for a, b in zip(s12, s6))
    gap_6_3 = max(abs(a[1] - b[1]) for a, b in zip(s6, s3))
    assert gap_12_6 < gap_6_3


@pytest.mark.parametrize("n", [10, 11, 12])
def test_period_ends_agree(n):
    start = float(phi(3, n, 0).value)
    end = float(period_end_value(3, n).value)
    assert abs(start - end) < 1e-4


def test_scaling_identity():
    for b in (2, 3):
        r = scaling_identity_check(b, 100)
        assert r.ok, str(r)
        assert r.max_deviation < 1e-9


def test_csv_format():
    text = series_to_csv([(0.0, 1.0), (0.5, 1.0 / 3)])
    lines = text.splitlines()
    assert lines[0] == "x,value"
    assert lines[2] == "0.5,0.333333333333333"


def test_workers_do_not_change_output():
    assert sample_h(3, 6, 16, workers=2) == sample_h(3, 6, 16, workers=1)
