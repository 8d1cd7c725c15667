"""Sampling the periodic fluctuation of A_b.

A_b(n) = (2b - 1)^(log_b n) H_b(log_b n) with H_b of period 1.  The
approximants are

    phi_n(alpha) = A_b(e_n(alpha)) / (2b - 1)^(log_b e_n(alpha)),
    e_n(alpha)   = b^(n+1) + b * floor(b^n alpha) + 1,

and H_b(x) is approximated by phi_n(b^x - 1).  The numerator is an exact
integer from :func:`subwords.summatory.a_fast`; only the final division runs
in floating point, with WORKPREC bits, which keeps the relative error far
below 1e-12 for any argument this module can produce.

For b > 2 the argument b^x - 1 runs over [0, b - 1), so alpha is accepted on
that whole range rather than on [0, 1) only.
"""

from __future__ import annotations

import csv
import io
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from ._workers import worker_count
from .summatory import a_fast
from .words import DomainError, check_base

WORKPREC = 128
ERROR_BUDGET = 1e-12


def _as_fraction(alpha) -> Fraction:
    if isinstance(alpha, mpmath.mpf):
        m, e = alpha.man_exp
        return Fraction(int(m)) * Fraction(2) ** int(e)
    return Fraction(alpha)


def e_index(b: int, n: int, alpha) -> int:
    """b^(n+1) + b floor(b^n alpha) + 1, with the floor taken exactly."""
    b = check_base(b)
    a = _as_fraction(alpha)
    if n < 1:
        raise DomainError("n must be >= 1")
    if not 0 <= a < b - 1:
        raise DomainError(f"alpha must lie in [0, {b - 1})")
    return b ** (n + 1) + b * math.floor(b**n * a) + 1


def normalized(b: int, m: int, prec: int = WORKPREC) -> mpmath.mpf:
    """A_b(m) / (2b - 1)^(log_b m) for m >= 1."""
    b = check_base(b)
    if m < 1:
        raise DomainError("m must be >= 1")
    with mpmath.workprec(prec):
        lb = mpmath.log(b)
        expo = mpmath.log(m) * mpmath.log(2 * b - 1) / lb
        return mpmath.mpf(a_fast(b, m)) / mpmath.exp(expo)


@dataclass(frozen=True)
class PhiSample:
    alpha: Fraction
    n_index: int
    argument: int
    numerator: int
    value: mpmath.mpf

    def __float__(self) -> float:
        return float(self.value)


def phi(b: int, n: int, alpha) -> PhiSample:
    e = e_index(b, n, alpha)
    return PhiSample(_as_fraction(alpha), n, e, a_fast(b, e), normalized(b, e))


def grid_alpha(b: int, x: Fraction, n: int) -> Fraction:
    """b^x - 1, rounded down to the resolution 1/b^n seen by e_n.

    Only floor(b^n alpha) enters e_n, so this is the exact integer
    floor(b^n (b^x - 1)) divided by b^n.
    """
    with mpmath.workprec(WORKPREC + 4 * n):
        t = mpmath.power(b, n) * (mpmath.power(b, mpmath.mpf(x.numerator) / x.denominator) - 1)
        k = int(mpmath.floor(t))
    return Fraction(k, b**n)


def _h_point(args) -> float:
    b, n, x = args
    return float(phi(b, n, grid_alpha(b, x, n)).value)


def sample_h(b: int, n: int, resolution: int = 512, workers: int | None = None) -> list[tuple[float, float]]:
    """[(x_k, phi_n(b^x_k - 1))] for x_k = k / resolution, k < resolution."""
    b = check_base(b)
    if resolution < 2:
        raise DomainError("resolution must be >= 2")
    if n < 1:
        raise DomainError("n must be >= 1")
    xs = [Fraction(k, resolution) for k in range(resolution)]
    jobs = [(b, n, x) for x in xs]
    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            values = list(pool.map(_h_point, jobs, chunksize=max(1, resolution // (4 * workers))))
    else:
        values = [_h_point(j) for j in jobs]
    return [(float(x), v) for x, v in zip(xs, values)]


def series_to_csv(series: Sequence[tuple[float, float]]) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["x", "value"])
    for x, v in series:
        wr.writerow([f"{x:.15g}", f"{v:.15g}"])
    return buf.getvalue()


def max_gap(s: Sequence[tuple[float, float]], t: Sequence[tuple[float, float]]) -> float:
    if len(s) != len(t):
        raise DomainError("series must share a grid")
    return max(abs(u[1] - v[1]) for u, v in zip(s, t))


def convergence_gaps(b: int, ns: Sequence[int], resolution: int = 64) -> dict[int, float]:
    """{n: max_k |sample_n - sample_(n-1)|} for consecutive entries of ``ns``."""
    ns = sorted(ns)
    series = {n: sample_h(b, n, resolution) for n in ns}
    return {n: max_gap(series[n], series[m]) for m, n in zip(ns, ns[1:])}


def period_end_value(b: int, n: int) -> PhiSample:
    """phi_n at the last point of its grid, alpha = b - 1 - b^-n (x -> 1)."""
    b = check_base(b)
    return phi(b, n, Fraction(b - 1) - Fraction(1, b**n))


@dataclass
class ScalingReport:
    base: int
    samples: int
    exact_ok: bool
    max_deviation: float
    counterexample: tuple[int, int, int] | None

    @property
    def ok(self) -> bool:
        return self.exact_ok and self.max_deviation < 1e-9

    def __str__(self) -> str:
        status = "ok" if self.ok else f"failed at (j, k, r) = {self.counterexample}"
        return (
            f"scaling identity b={self.base}: {self.samples} samples, exact {self.exact_ok}, "
            f"max float deviation {self.max_deviation:.3e} ({status})"
        )


def scaling_identity_check(b: int, samples: int = 100, seed: int = 0, j_max: int = 5, k_max: int = 8) -> ScalingReport:
    """A_b(b^j m) = (2b - 1)^j A_b(m) for m = b^k + r, exactly and after normalisation."""
    b = check_base(b)
    rng = random.Random(seed)
    q = 2 * b - 1
    worst = 0.0
    for _ in range(samples):
        k = rng.randint(1, k_max)
        r = rng.randrange(b**k)
        m = b**k + r
        a_m = a_fast(b, m)
        ref = normalized(b, m)
        for j in range(j_max + 1):
            if a_fast(b, b**j * m) != q**j * a_m:
                return ScalingReport(b, samples, False, worst, (j, k, r))
            dev = float(abs(normalized(b, b**j * m) - ref))
            worst = max(worst, dev)
    return ScalingReport(b, samples, True, worst, None)


__all__ = [
    "ERROR_BUDGET",
    "PhiSample",
    "ScalingReport",
    "WORKPREC",
    "convergence_gaps",
    "e_index",
    "grid_alpha",
    "max_gap",
    "normalized",
    "period_end_value",
    "phi",
    "sample_h",
    "scaling_identity_check",
    "series_to_csv",
]
