"""Every route to S_b(n), the number of distinct canonical subwords of rep_b(n).

* :func:`s_oracle` counts subwords of the expansion directly.
* :func:`s_recurrence` uses the three leading-digit recurrences.
* :func:`s_fast` multiplies the b x b digit matrices of the linear
  representation, O(log n) exact integer matrix-vector products.

The coefficients of the representation are always computed from the first
b**3 oracle values with the closed-form inverse of the base-case system.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .words import (
    DomainError,
    check_base,
    count_canonical_subwords,
    count_canonical_subwords_batch,
    digit_complement,
    rep,
    val,
)


def s_oracle(b: int, n: int) -> int:
    return count_canonical_subwords(b, rep(b, n))


def s_recurrence(b: int, n: int) -> int:
    """S_b(n) by dispatch on the two leading digits.

    With n = x b^l + r, second digit d:
      d = 0  -> S(x b^{l-1} + r') + S(r')
      d = x  -> 2 S(x b^{l-1} + r') - S(r')
      else   -> S(x b^{l-1} + r') + 2 S(d b^{l-1} + r') - 2 S(r')
    where r' is the value of the digits after d.  Every subproblem is "some
    leading digit followed by the suffix starting at index i", so the memo
    has at most b * len(rep) entries.
    """
    b = check_base(b)
    w = rep(b, n)
    L = len(w)
    if L == 0:
        return 1

    @lru_cache(maxsize=None)
    def lead(x: int, i: int) -> int:
        # S(val(x . w[i:]))
        if i == L:
            return 2
        d = w[i]
        if d == 0:
            return lead(x, i + 1) + tail(i + 1)
        if d == x:
            return 2 * lead(x, i + 1) - tail(i + 1)
        return lead(x, i + 1) + 2 * lead(d, i + 1) - 2 * tail(i + 1)

    @lru_cache(maxsize=None)
    def tail(i: int) -> int:
        # S(val(w[i:])), leading zeroes dropped
        while i < L and w[i] == 0:
            i += 1
        return 1 if i == L else lead(w[i], i + 1)

    return lead(w[0], 1)


def s_recurrence_batch(b: int, words: np.ndarray) -> np.ndarray:
    """:func:`s_recurrence` evaluated bottom-up for many words at once (int64).

    ``lead[:, x]`` holds S(val(x . suffix)) for the current suffix and
    ``tail`` holds S(val(suffix)).
    """
    b = check_base(b)
    words = np.asarray(words).astype(np.intp)
    W, L = words.shape
    if L > 60:
        raise DomainError("batch evaluation is limited to words of length <= 60")
    lead = np.full((W, b), 2, dtype=np.int64)
    tail = np.ones(W, dtype=np.int64)
    rows = np.arange(W)
    xs = np.arange(b)[None, :]
    for i in range(L - 1, 0, -1):
        d = words[:, i][:, None]
        lead_d = lead[rows, words[:, i]][:, None]
        t = tail[:, None]
        new_lead = np.where(
            d == 0,
            lead + t,
            np.where(d == xs, 2 * lead - t, lead + 2 * lead_d - 2 * t),
        )
        tail = np.where(words[:, i] == 0, tail, lead_d[:, 0])
        lead = new_lead
    if L == 0:
        return tail
    return lead[rows, words[:, 0]]


def lemma_matrix(b: int, S=None) -> np.ndarray:
    """The b^3 x b^3 base-case system matrix (identity blocks scaled by S values).

    Block (i, 0) is S(i) I; block (i, 1 + s) is S(b i + s) I, for i < b and
    s <= b - 2.  ``S`` defaults to the oracle; object dtype keeps ints exact.
    """
    b = check_base(b)
    if S is None:
        def S(n):
            return s_oracle(b, n)
    k = b * b
    eye = np.eye(k, dtype=object)
    blocks = []
    for i in range(b):
        row = [S(i) * eye] + [S(b * i + s) * eye for s in range(b - 1)]
        blocks.append(row)
    return np.block(blocks)


def lemma_matrix_inverse(b: int) -> np.ndarray:
    """Closed-form inverse of :func:`lemma_matrix`."""
    b = check_base(b)
    k = b * b
    eye = np.eye(k, dtype=object)
    zero = np.zeros((k, k), dtype=object)
    blocks = [[zero] * b for _ in range(b)]
    blocks[0] = [3 * eye] + [2 * eye] * (b - 2) + [-(2 * b - 3) * eye]
    blocks[1] = [-2 * eye] + [zero] * (b - 2) + [eye]
    for i in range(2, b):
        row = [zero] * b
        row[i - 1] = -eye
        row[b - 1] = eye
        blocks[i] = row
    return np.block(blocks)


@dataclass(frozen=True)
class RegularityCoefficients:
    """a[r] and c[r][s] of S(n b^2 + r) = a_r S(n) + sum_s c_{r,s} S(n b + s)."""

    base: int
    a: tuple[int, ...]
    c: tuple[tuple[int, ...], ...]  # c[r][s], s = 0 .. b-2

    def relation(self, r: int) -> tuple[int, ...]:
        return (self.a[r],) + self.c[r]


def solve_coefficients(b: int) -> RegularityCoefficients:
    b = check_base(b)
    S = [s_oracle(b, n) for n in range(b**3)]
    bb = b * b
    top = (b - 1) * bb
    a, c = [], []
    for r in range(bb):
        a.append(3 * S[r] + 2 * sum(S[j * bb + r] for j in range(1, b - 1)) - (2 * b - 3) * S[top + r])
        row = [-2 * S[r] + S[top + r]]
        row += [-S[s * bb + r] + S[top + r] for s in range(1, b - 1)]
        c.append(tuple(row))
    return RegularityCoefficients(b, tuple(a), tuple(c))


@dataclass(frozen=True)
class LinearRepresentation:
    """V(b n + s) = mu[s] V(n) with V(n) = (S(n), S(bn), ..., S(bn + b - 2))."""

    base: int
    mu: tuple[tuple[tuple[int, ...], ...], ...]
    v0: tuple[int, ...]

    @property
    def selector(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.base - 1)

    def matrix(self, s: int) -> np.ndarray:
        return np.array(self.mu[s], dtype=object)

    def vector(self, n: int) -> tuple[int, ...]:
        """V(n): apply the digit matrices most significant digit first."""
        v = self.v0
        for d in rep(self.base, n):
            m = self.mu[d]
            v = tuple(sum(mij * vj for mij, vj in zip(row, v)) for row in m)
        return v

    def evaluate(self, n: int) -> int:
        return self.vector(n)[0]


def build_linear_representation(b: int, coeffs: RegularityCoefficients | None = None) -> LinearRepresentation:
    b = check_base(b)
    coeffs = coeffs or solve_coefficients(b)
    mu = []
    for s in range(b):
        if s < b - 1:
            first = tuple(1 if j == s + 1 else 0 for j in range(b))
        else:
            first = (2 * b - 1,) + (-1,) * (b - 1)
        rows = [first] + [coeffs.relation(b * s + t) for t in range(b - 1)]
        mu.append(tuple(rows))
    v0 = (1, 1) + (2,) * (b - 2)
    return LinearRepresentation(b, tuple(mu), v0)


@lru_cache(maxsize=None)
def linear_representation(b: int) -> LinearRepresentation:
    """Cached :func:`build_linear_representation` (immutable, safe to share)."""
    return build_linear_representation(b)


def s_fast(b: int, n: int, lin: LinearRepresentation | None = None) -> int:
    """S_b(n) = (1 0 ... 0) mu(n_0) ... mu(n_k) V(0), n_0 least significant."""
    b = check_base(b)
    if n < 0:
        raise DomainError("n must be non-negative")
    lin = lin or linear_representation(b)
    return lin.evaluate(n)


def s_fast_batch(b: int, words: np.ndarray, lin: LinearRepresentation | None = None) -> np.ndarray:
    """:func:`s_fast` for many equal-length words with int64 matrices."""
    b = check_base(b)
    lin = lin or linear_representation(b)
    words = np.asarray(words).astype(np.intp)
    W, L = words.shape
    if L > 60:
        raise DomainError("batch evaluation is limited to words of length <= 60")
    mu = np.array(lin.mu, dtype=np.int64)
    v = np.tile(np.array(lin.v0, dtype=np.int64), (W, 1))
    for i in range(L):
        v = np.einsum("wij,wj->wi", mu[words[:, i]], v)
    return v[:, 0]


def s_oracle_batch(b: int, words: np.ndarray) -> np.ndarray:
    return count_canonical_subwords_batch(b, words)


@dataclass
class RegularityReport:
    base: int
    n_max: int
    ok: bool
    counterexample: str | None
    redundant: dict  # r -> True when relation r is an integer combination of the others

    def __str__(self) -> str:
        status = "ok" if self.ok else f"FAILED: {self.counterexample}"
        red = ", ".join(f"r={r}" for r, v in sorted(self.redundant.items()) if v)
        return f"base {self.base}, n <= {self.n_max}: {status}; redundant relations: {red}"


def redundancy_witness(coeffs: RegularityCoefficients, r: int) -> tuple[int, ...]:
    """Coefficients of relation r = b s + b - 1 rebuilt from the other relations.

    S(b^2 n + b s + b - 1) = S(b (bn + s) + b - 1)
                           = (2b - 1) S(bn + s) - sum_t S(b^2 n + b s + t),
    with S(bn + b - 1) itself rewritten by the same identity when s = b - 1.
    """
    b = coeffs.base
    s, t_last = divmod(r, b)
    if t_last != b - 1:
        raise DomainError("only relations r = b s + b - 1 are redundant")
    if s < b - 1:
        gen = tuple(1 if j == s + 1 else 0 for j in range(b))
    else:
        gen = (2 * b - 1,) + (-1,) * (b - 1)
    out = [(2 * b - 1) * g for g in gen]
    for t in range(b - 1):
        rel = coeffs.relation(b * s + t)
        out = [o - x for o, x in zip(out, rel)]
    return tuple(out)


def verify_regularity(b: int, n_max: int, coeffs: RegularityCoefficients | None = None,
                      values: Sequence[int] | None = None) -> RegularityReport:
    """Check both relation families for every n <= n_max against oracle values."""
    b = check_base(b)
    coeffs = coeffs or solve_coefficients(b)
    bb = b * b
    need = n_max * bb + bb
    if values is None or len(values) < need:
        values = [s_oracle(b, n) for n in range(need)]
    S = values
    bad = None
    for n in range(n_max + 1):
        gens = [S[n]] + [S[b * n + s] for s in range(b - 1)]
        for r in range(bb):
            rhs = sum(x * g for x, g in zip(coeffs.relation(r), gens))
            if S[n * bb + r] != rhs:
                bad = f"S({n}*{bb}+{r}) = {S[n * bb + r]} != {rhs}"
                break
        if bad:
            break
        rhs = (2 * b - 1) * S[n] - sum(S[b * n + s] for s in range(b - 1))
        if S[b * n + b - 1] != rhs:
            bad = f"S({b}*{n}+{b - 1}) = {S[b * n + b - 1]} != {rhs}"
            break
    redundant = {}
    for s in range(b):
        r = b * s + b - 1
        redundant[r] = redundancy_witness(coeffs, r) == coeffs.relation(r)
    return RegularityReport(b, n_max, bad is None, bad, redundant)


def palindrome_check(b: int, l: int, lin: LinearRepresentation | None = None) -> bool:
    """S((b-1) b^l + r) == S((b-1) b^l + b^l - r - 1) for all 0 <= r < b^l."""
    b = check_base(b)
    if l < 1:
        raise DomainError("palindrome check needs l >= 1")
    lin = lin or linear_representation(b)
    lo = (b - 1) * b**l
    vals = [lin.evaluate(lo + r) for r in range(b**l)]
    return vals == vals[::-1]


def palindrome_word_check(b: int, u: Sequence[int]) -> bool:
    top = (b - 1,)
    return count_canonical_subwords(b, top + tuple(u)) == count_canonical_subwords(
        b, top + digit_complement(b, u)
    )


def coefficients_to_json(lin: LinearRepresentation, coeffs: RegularityCoefficients) -> str:
    def s(x):
        return str(x)

    obj = {
        "base": lin.base,
        "a": [s(x) for x in coeffs.a],
        "c": [[s(x) for x in row] for row in coeffs.c],
        "mu": [[[s(x) for x in row] for row in m] for m in lin.mu],
        "v0": [s(x) for x in lin.v0],
    }
    return json.dumps(obj, indent=1)


def coefficients_from_json(text: str) -> tuple[LinearRepresentation, RegularityCoefficients]:
    obj = json.loads(text)
    b = int(obj["base"])
    coeffs = RegularityCoefficients(
        b, tuple(int(x) for x in obj["a"]), tuple(tuple(int(x) for x in row) for row in obj["c"])
    )
    mu = tuple(tuple(tuple(int(x) for x in row) for row in m) for m in obj["mu"])
    lin = LinearRepresentation(b, mu, tuple(int(x) for x in obj["v0"]))
    return lin, coeffs


def s_values(b: int, n_stop: int) -> list[int]:
    """Oracle values S(0), ..., S(n_stop - 1)."""
    return [s_oracle(b, n) for n in range(n_stop)]


__all__ = [
    "LinearRepresentation",
    "RegularityCoefficients",
    "RegularityReport",
    "build_linear_representation",
    "coefficients_from_json",
    "coefficients_to_json",
    "lemma_matrix",
    "lemma_matrix_inverse",
    "linear_representation",
    "palindrome_check",
    "palindrome_word_check",
    "redundancy_witness",
    "s_fast",
    "s_fast_batch",
    "s_oracle",
    "s_oracle_batch",
    "s_recurrence",
    "s_recurrence_batch",
    "s_values",
    "solve_coefficients",
    "val",
    "verify_regularity",
]
