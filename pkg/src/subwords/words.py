"""Base-b digit words, word binomial coefficients and distinct-subword counts.

Words are plain tuples of ints, most significant digit first.  The empty
tuple is the empty word.  All counts are Python ints, so they never overflow.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

Word = tuple[int, ...]


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


def check_base(b: int) -> int:
    if not isinstance(b, (int, np.integer)) or isinstance(b, bool) or b < 2:
        raise DomainError(f"base must be an integer >= 2, got {b!r}")
    return int(b)


def check_word(b: int, w: Iterable[int]) -> Word:
    w = tuple(int(d) for d in w)
    for d in w:
        if not 0 <= d < b:
            raise DomainError(f"digit {d} is not valid in base {b}")
    return w


def parse_word(b: int, text: str) -> Word:
    """Parse ``"0121"`` (or ``"1,10,3"`` for bases above 10) into a word."""
    check_base(b)
    text = text.strip()
    if text in ("", "e", "eps", "ε"):
        return ()
    if "," in text:
        return check_word(b, (int(t) for t in text.split(",")))
    return check_word(b, (int(c, 36) for c in text))


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "ε"
    if max(w) < 10:
        return "".join(str(d) for d in w)
    return ",".join(str(d) for d in w)


def rep(b: int, n: int) -> Word:
    """Greedy base-b expansion of ``n``; ``rep(b, 0)`` is the empty word."""
    check_base(b)
    if n < 0:
        raise DomainError("rep is defined for non-negative integers only")
    digits = []
    while n:
        n, d = divmod(n, b)
        digits.append(d)
    return tuple(reversed(digits))


def val(b: int, w: Sequence[int]) -> int:
    """Value of ``w`` read in base b.  Leading zeroes are allowed."""
    check_base(b)
    n = 0
    for d in w:
        if not 0 <= d < b:
            raise DomainError(f"digit {d} is not valid in base {b}")
        n = n * b + d
    return n


def is_canonical(b: int, w: Sequence[int]) -> bool:
    check_base(b)
    return len(w) == 0 or w[0] != 0


def normalize(b: int, w: Sequence[int]) -> Word:
    """``rep(b, val(b, w))``: strip leading zeroes."""
    return rep(b, val(b, w))


def digit_complement(b: int, u: Sequence[int]) -> Word:
    """Replace each digit a by (b-1) - a."""
    u = check_word(check_base(b), u)
    return tuple(b - 1 - a for a in u)


def word_binomial(u: Sequence[int], v: Sequence[int]) -> int:
    """Number of occurrences of ``v`` as a scattered subword of ``u``.

    Classical prefix tabulation: after reading a prefix p of u, ``row[j]``
    holds the binomial coefficient (p choose v[:j]).
    """
    m = len(v)
    if m > len(u):
        return 0
    row = [1] + [0] * m
    for a in u:
        # right to left so row[j-1] is still the value for the shorter prefix
        for j in range(m, 0, -1):
            if v[j - 1] == a:
                row[j] += row[j - 1]
    return row[m]


class SuffixState:
    """Distinct-subword bookkeeping for a word, extendable on the left.

    ``total`` is the number of distinct subwords (empty word included) and
    ``after[a]`` is ``total`` of the suffix following the first occurrence of
    letter ``a`` (``None`` when ``a`` does not occur).  Prepending a letter c
    costs O(b): every new subword either avoids the new c or starts with it,
    and those starting with c are counted by the old ``total``; the overlap
    is exactly the subwords starting at the old first c.
    """

    __slots__ = ("total", "after")

    def __init__(self, b: int, total: int = 1, after: tuple | None = None):
        self.total = total
        self.after = after if after is not None else (None,) * b

    def prepend(self, c: int) -> "SuffixState":
        prev = self.after[c]
        total = 2 * self.total - (prev if prev is not None else 0)
        after = self.after[:c] + (self.total,) + self.after[c + 1:]
        return SuffixState(len(after), total, after)

    def canonical_count(self) -> int:
        # subwords starting with a nonzero letter a <-> subwords of the suffix after the first a
        return 1 + sum(x for x in self.after[1:] if x is not None)


def suffix_state(b: int, w: Sequence[int]) -> SuffixState:
    st = SuffixState(b)
    for c in reversed(w):
        st = st.prepend(c)
    return st


def count_canonical_subwords(b: int, w: Sequence[int]) -> int:
    """Number of distinct subwords of ``w`` lying in L_b, the empty word included.

    >>> count_canonical_subwords(3, (1, 2, 1))
    7
    """
    w = check_word(check_base(b), w)
    return suffix_state(b, w).canonical_count()


def count_canonical_subwords_batch(b: int, words: np.ndarray) -> np.ndarray:
    """Vectorised :func:`count_canonical_subwords` over the rows of ``words``.

    Same suffix recurrence, evaluated column by column with int64
    arithmetic; counts are bounded by 2**len, so rows are limited to 60
    digits.
    """
    check_base(b)
    words = np.asarray(words)
    n_words, length = words.shape
    if length > 60:
        raise DomainError("batch counting is limited to words of length <= 60")
    total = np.ones(n_words, dtype=np.int64)
    after = np.zeros((n_words, b), dtype=np.int64)
    seen = np.zeros((n_words, b), dtype=bool)
    rows = np.arange(n_words)
    for p in range(length - 1, -1, -1):
        c = words[:, p].astype(np.intp)
        prev = np.where(seen[rows, c], after[rows, c], 0)
        new_total = 2 * total - prev
        after[rows, c] = total
        seen[rows, c] = True
        total = new_total
    return 1 + np.where(seen[:, 1:], after[:, 1:], 0).sum(axis=1)


def words_of_length(b: int, length: int, canonical: bool = True) -> np.ndarray:
    """All words of the given length as an int8 array, in increasing value order."""
    check_base(b)
    if length == 0:
        return np.zeros((1, 0), dtype=np.int8)
    lo = b ** (length - 1) if canonical else 0
    n = np.arange(lo, b**length, dtype=np.int64)
    out = np.empty((n.size, length), dtype=np.int8)
    for i in range(length - 1, -1, -1):
        n, out[:, i] = np.divmod(n, b)
    return out
