"""The summatory function A_b(n) = S_b(0) + ... + S_b(n - 1).

:func:`a_fast` mirrors :func:`subwords.regular.s_recurrence`: the two leading
digits of rep_b(n) select one of three recurrences, each adding an explicit
multiple of (2b - 1)^(l - 1).  :func:`decompose` runs the same recursion
symbolically and collects those constants by power of 2b - 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .regular import s_oracle
from .words import DomainError, check_base, rep, val

ORACLE_BUDGET = 10**7


def a_oracle(b: int, n: int, budget: int = ORACLE_BUDGET) -> int:
    b = check_base(b)
    if n > budget:
        raise DomainError(f"a_oracle refuses n > {budget}; use a_fast")
    return sum(s_oracle(b, j) for j in range(n))


def a_prefix_table(b: int, n_stop: int) -> list[int]:
    """[A(0), A(1), ..., A(n_stop)] from oracle values."""
    b = check_base(b)
    out = [0]
    for j in range(n_stop):
        out.append(out[-1] + s_oracle(b, j))
    return out


def a_closed_form_pure(b: int, x: int, l: int) -> int:
    """A_b(x b^l) = (2x - 1)(2b - 1)^l."""
    b = check_base(b)
    if not 1 <= x <= b - 1 or l < 0:
        raise DomainError("need 1 <= x <= b - 1 and l >= 0")
    return (2 * x - 1) * (2 * b - 1) ** l


def a_closed_form_mixed(b: int, x: int, y: int, l: int) -> int:
    """A_b(x b^l + y b^(l-1)) for nonzero digits x, y and l >= 1."""
    b = check_base(b)
    if not (1 <= x <= b - 1 and 1 <= y <= b - 1) or l < 1:
        raise DomainError("need nonzero digits x, y and l >= 1")
    k = 4 * x * b - 2 * x + 4 * y - 2 * b
    if y > x:
        k -= 1
    return k * (2 * b - 1) ** (l - 1)


def step_constant(b: int, x: int, d: int) -> int:
    """Coefficient of (2b - 1)^(l - 1) when the leading digits are x, d."""
    if d == 0:
        return (2 * b - 2) * (2 * x - 1)
    if d == x:
        return 4 * x * b - 2 * x - 2 * b + 2
    if d < x:
        return 4 * x * b - 4 * x - 2 * b + 3
    return 4 * x * b - 4 * x - 2 * b + 2


def a_fast(b: int, n: int) -> int:
    b = check_base(b)
    if n < 0:
        raise DomainError("n must be non-negative")
    w = rep(b, n)
    L = len(w)
    if L == 0:
        return 0
    q = 2 * b - 1

    @lru_cache(maxsize=None)
    def lead(x: int, i: int) -> int:
        # A(val(x . w[i:])); the argument has L - i + 1 digits
        if i == L:
            return 2 * x - 1
        d = w[i]
        k = step_constant(b, x, d) * q ** (L - i - 1)
        if d == 0:
            return k + lead(x, i + 1) + tail(i + 1)
        if d == x:
            return k + 2 * lead(x, i + 1) - tail(i + 1)
        return k + lead(x, i + 1) + 2 * lead(d, i + 1) - 2 * tail(i + 1)

    @lru_cache(maxsize=None)
    def tail(i: int) -> int:
        while i < L and w[i] == 0:
            i += 1
        return 0 if i == L else lead(w[i], i + 1)

    return lead(w[0], 1)


@dataclass(frozen=True)
class Decomposition:
    """A_b(n) = sum_i d[i] (2b - 1)^(ell - i), ell = floor(log_b n) - 1."""

    base: int
    n: int
    d: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.d) - 1

    def value(self) -> int:
        q = 2 * self.base - 1
        total = 0
        for x in self.d:
            total = total * q + x
        return total

    def to_json(self) -> str:
        return json.dumps(
            {"base": self.base, "n": str(self.n), "ell": self.ell, "d": [str(x) for x in self.d]}
        )

    @classmethod
    def from_json(cls, text: str) -> "Decomposition":
        obj = json.loads(text)
        return cls(int(obj["base"]), int(obj["n"]), tuple(int(x) for x in obj["d"]))


def decompose(b: int, n: int) -> Decomposition:
    """(2b - 1)-decomposition of A_b(n), n >= b.

    The recurrences are applied to the argument and to every remainder term
    A(r).  The shifted terms A(x b^(l-1) + r) and A(y b^(l-1) + r) are
    expanded the same way unless r = 0, in which case they are pure powers
    and contribute (2x - 1) at power l - 1 directly.  With this rule every
    contribution lands in powers 0 .. floor(log_b n) - 1 and the leading
    coefficient is positive.
    """
    b = check_base(b)
    if n < b:
        raise DomainError("the decomposition is defined for n >= b")
    w = rep(b, n)
    L = len(w)
    ell = L - 2
    zero = (0,) * (ell + 1)

    def add(*terms):
        out = list(zero)
        for mult, vec in terms:
            for k, v in enumerate(vec):
                out[k] += mult * v
        return tuple(out)

    def unit(power: int, value: int):
        out = list(zero)
        out[ell - power] = value
        return tuple(out)

    # every argument met is x . w[i:] for a digit x, or a suffix of w
    @lru_cache(maxsize=None)
    def lead(x: int, i: int):
        if i == L:
            return unit(0, 2 * x - 1)
        d = w[i]
        step = unit(L - i - 1, step_constant(b, x, d))
        if d == 0:
            return add((1, step), (1, shifted(x, i + 1)), (1, tail(i + 1)))
        if d == x:
            return add((1, step), (2, shifted(x, i + 1)), (-1, tail(i + 1)))
        return add((1, step), (1, shifted(x, i + 1)), (2, shifted(d, i + 1)), (-2, tail(i + 1)))

    def shifted(x: int, i: int):
        # x b^(L-i) + val(w[i:]) is a pure power exactly when w[i:] is all zeros
        if all(c == 0 for c in w[i:]):
            return unit(L - i, 2 * x - 1)
        return lead(x, i)

    @lru_cache(maxsize=None)
    def tail(i: int):
        while i < L and w[i] == 0:
            i += 1
        return zero if i == L else lead(w[i], i + 1)

    return Decomposition(b, n, lead(w[0], 1))


@dataclass
class MultiplicativityReport:
    base: int
    n_max: int
    ok: bool
    counterexample: int | None

    def __str__(self) -> str:
        if self.ok:
            return f"A_{self.base}({self.base}n) = {2 * self.base - 1} A_{self.base}(n) for all n <= {self.n_max}"
        return f"fails at n = {self.counterexample}"


def check_multiplicativity(b: int, n_max: int) -> MultiplicativityReport:
    b = check_base(b)
    q = 2 * b - 1
    for n in range(n_max + 1):
        if a_fast(b, n * b) != q * a_fast(b, n):
            return MultiplicativityReport(b, n_max, False, n)
    return MultiplicativityReport(b, n_max, True, None)


__all__ = [
    "Decomposition",
    "MultiplicativityReport",
    "a_closed_form_mixed",
    "a_closed_form_pure",
    "a_fast",
    "a_oracle",
    "a_prefix_table",
    "check_multiplicativity",
    "decompose",
    "step_constant",
    "val",
]
