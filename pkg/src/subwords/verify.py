"""Named cross-checks between the independent computation routes.

Every check returns a :class:`CheckResult` with the first counterexample in
``detail`` when it fails.  :func:`base_suite` bundles the per-base invariant
sweeps used by ``subwords verify``; the acceptance tests call the individual
checks with their own bounds.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import tables
from .asymptotics import scaling_identity_check
from .pascal import row_positive_count, triangle_entry
from .regular import (
    build_linear_representation,
    lemma_matrix,
    lemma_matrix_inverse,
    palindrome_check,
    s_fast,
    s_fast_batch,
    s_oracle,
    s_oracle_batch,
    s_recurrence,
    s_recurrence_batch,
    solve_coefficients,
    verify_regularity,
)
from .summatory import a_closed_form_mixed, a_closed_form_pure, a_fast, a_prefix_table, decompose, step_constant
from .trie import block_factorization, build_trie, node_count, trie_node_counts, verify_structure
from .words import (
    SuffixState,
    check_base,
    count_canonical_subwords,
    count_canonical_subwords_batch,
    digit_complement,
    normalize,
    rep,
    val,
    words_of_length,
)

CHUNK = 1 << 19


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{tag}  {self.name}  [{self.seconds:.2f}s]{extra}"


def run_check(name: str, fn: Callable[..., tuple[bool, str]], *args, **kw) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = fn(*args, **kw)
    return CheckResult(name, bool(ok), detail, time.perf_counter() - t0)


def _fail(msg: str) -> tuple[bool, str]:
    return False, msg


def _word_chunks(b: int, length: int):
    """All canonical words of a length, as int8 arrays of at most CHUNK rows."""
    if length == 0:
        yield 0, np.zeros((1, 0), dtype=np.int8)
        return
    lo, hi = b ** (length - 1), b**length
    for start in range(lo, hi, CHUNK):
        n = np.arange(start, min(start + CHUNK, hi), dtype=np.int64)
        out = np.empty((n.size, length), dtype=np.int8)
        for i in range(length - 1, -1, -1):
            n, out[:, i] = np.divmod(n, b)
        yield start, out


# ---- words / trie ---------------------------------------------------------

def check_round_trip(b: int, n_stop: int) -> tuple[bool, str]:
    for n in range(n_stop):
        w = rep(b, n)
        if val(b, w) != n or (w and w[0] == 0):
            return _fail(f"n={n}")
        if normalize(b, (0, 0) + w) != w:
            return _fail(f"leading zeros of {w}")
    return True, f"n < {n_stop}"


def check_s_routes(b: int, max_len: int, with_trie: bool = False) -> tuple[bool, str]:
    """Oracle, recurrence and matrix product agree on every n with |rep_b(n)| <= max_len.

    With ``with_trie`` the explicit trie node count joins the comparison.
    """
    b = check_base(b)
    lin = build_linear_representation(b)
    total = 0
    for length in range(max_len + 1):
        for start, w in _word_chunks(b, length):
            o = s_oracle_batch(b, w)
            routes = {"recurrence": s_recurrence_batch(b, w), "matrix": s_fast_batch(b, w, lin)}
            if with_trie:
                routes["trie"] = trie_node_counts(b, w)
            for name, vals in routes.items():
                bad = np.flatnonzero(vals != o)
                if bad.size:
                    n = start + int(bad[0])
                    return _fail(f"{name} differs from oracle at n={n}: {vals[bad[0]]} vs {o[bad[0]]}")
            total += len(o)
    # the int64 batch routes against the exact scalar routes on a sample
    rng = random.Random(b)
    for _ in range(200):
        n = rng.randrange(b**max_len) if max_len else 0
        o = s_oracle(b, n)
        if s_recurrence(b, n) != o or s_fast(b, n, lin) != o:
            return _fail(f"scalar routes differ at n={n}")
    return True, f"{total} values"


def check_trie_structure(b: int, max_len: int) -> tuple[bool, str]:
    count = 0
    for length in range(1, max_len + 1):
        for start, w in _word_chunks(b, length):
            for i, row in enumerate(w):
                word = tuple(int(d) for d in row)
                t = build_trie(b, word)
                if node_count(t) != count_canonical_subwords(b, word):
                    return _fail(f"node count of {word}")
                if not verify_structure(t, block_factorization(b, word)):
                    return _fail(f"block structure of {word}")
                count += 1
    return True, f"{count} tries"


def _all_words(b: int, max_len: int):
    """(u, SuffixState of u) for every u over {0..b-1} with |u| <= max_len."""
    stack = [((), SuffixState(b))]
    while stack:
        u, st = stack.pop()
        yield u, st
        if len(u) < max_len:
            for c in range(b):
                stack.append(((c,) + u, st.prepend(c)))


def check_word_lemmas(b: int, max_len: int) -> tuple[bool, str]:
    """The five leading-letter identities for subword counts, every u with |u| <= max_len."""
    b = check_base(b)
    nz = range(1, b)
    checked = 0
    for u, st in _all_words(b, max_len):
        cnt = SuffixState.canonical_count
        s0 = st.prepend(0)
        for x in nz:
            xu = cnt(st.prepend(x))
            x0u = cnt(s0.prepend(x))
            if cnt(s0.prepend(0).prepend(x)) != 2 * x0u - xu:
                return _fail(f"x00u with x={x}, u={u}")
            if cnt(s0.prepend(x).prepend(x)) != x0u + xu:
                return _fail(f"xx0u with x={x}, u={u}")
            for y in nz:
                syu = st.prepend(y)
                yu = cnt(syu)
                xyu = cnt(syu.prepend(x))
                if cnt(syu.prepend(0).prepend(x)) != xyu + yu:
                    return _fail(f"x0yu with x={x}, y={y}, u={u}")
                if cnt(syu.prepend(x).prepend(x)) != 2 * xyu - yu:
                    return _fail(f"xxyu with x={x}, y={y}, u={u}")
            checked += 1
        for z in range(b):
            szu = st.prepend(z)
            # the last term is the count of the normalised word zu
            zu_norm = normalize(b, (z,) + u) if z == 0 else None
            zu = count_canonical_subwords(b, zu_norm) if z == 0 else cnt(szu)
            for x in nz:
                xzu = cnt(szu.prepend(x))
                for y in nz:
                    if y == x:
                        continue
                    syzu = szu.prepend(y)
                    if cnt(syzu.prepend(x)) != xzu + 2 * cnt(syzu) - 2 * zu:
                        return _fail(f"xyzu with x={x}, y={y}, z={z}, u={u}")
    return True, f"{checked} words u"


# ---- regularity -------------------------------------------------------------

def check_initial_values(b: int) -> tuple[bool, str]:
    """S_b(n), n < b^3, against the published shape table."""
    for n in range(b**3):
        shape = tables.classify(tables.S_INITIAL, rep(b, n), b, range(1, b))
        if len(shape) != 1:
            return _fail(f"n={n} has shapes {shape}")
        if s_oracle(b, n) != tables.S_INITIAL[shape[0]]:
            return _fail(f"n={n} ({shape[0]}): {s_oracle(b, n)} != {tables.S_INITIAL[shape[0]]}")
    return True, f"n < {b ** 3}"


def check_block_values(b: int) -> tuple[bool, str]:
    """S_b(n b^2 + r) for b <= n < b^2, r < b^2 against the published shape tables."""
    count = 0
    for n in range(b, b * b):
        wn = rep(b, n)
        nshape = tables.classify(tables.S_BLOCK, wn, b, range(1, b))
        if len(nshape) != 1:
            return _fail(f"n={n} has shapes {nshape}")
        table = tables.S_BLOCK[nshape[0]]
        for r in range(b * b):
            word = wn + divmod(r, b)
            hits = [k for k in table if tables.matches(nshape[0] + tables.pad_shape(k), word, b, range(1, b))]
            if len(hits) != 1:
                return _fail(f"n={n}, r={r} has shapes {hits}")
            got = s_oracle(b, n * b * b + r)
            if got != table[hits[0]]:
                return _fail(f"S({n}*{b * b}+{r}) = {got}, table says {table[hits[0]]}")
            count += 1
    return True, f"{count} values"


def check_coefficient_tables(b: int) -> tuple[bool, str]:
    """a_r, c_{r,s} from the closed forms against the published shape tables."""
    co = solve_coefficients(b)
    var = range(1, b - 1)
    for r in range(b * b):
        w = rep(b, r)
        shape = tables.classify(tables.A_R, w, b, var)
        if len(shape) != 1:
            return _fail(f"r={r} has shapes {shape}")
        if co.a[r] != tables.A_R[shape[0]](b):
            return _fail(f"a_{r} = {co.a[r]}, table says {tables.A_R[shape[0]](b)}")
        if co.c[r][0] != tables.C_R0[shape[0]]:
            return _fail(f"c_({r},0) = {co.c[r][0]}, table says {tables.C_R0[shape[0]]}")
        for s in range(1, b - 1):
            hits = tables.classify(tables.C_RS, w + (s,), b, var)
            if len(hits) != 1:
                return _fail(f"(r, s) = ({r}, {s}) has shapes {hits}")
            if co.c[r][s] != tables.C_RS[hits[0]]:
                return _fail(f"c_({r},{s}) = {co.c[r][s]}, table says {tables.C_RS[hits[0]]}")
    return True, f"{b * b} values of r"


def check_published_coefficients() -> tuple[bool, str]:
    c3, c2 = solve_coefficients(3), solve_coefficients(2)
    got3 = {"a": c3.a, "c0": tuple(r[0] for r in c3.c), "c1": tuple(r[1] for r in c3.c)}
    if got3 != tables.COEFFS_B3:
        return _fail(f"base 3: {got3}")
    got2 = {"a": c2.a, "c0": tuple(r[0] for r in c2.c)}
    if got2 != tables.COEFFS_B2:
        return _fail(f"base 2: {got2}")
    return True, "27 + 8 values"


def check_published_matrices() -> tuple[bool, str]:
    lin = build_linear_representation(3)
    if lin.mu != tables.MU3:
        return _fail(f"mu_3 = {lin.mu}")
    return True, "mu_3(0), mu_3(1), mu_3(2)"


def table_s(b: int) -> Callable[[int], int]:
    """S_b(n), n < b^3, read off the published shape table."""
    def S(n: int) -> int:
        (shape,) = tables.classify(tables.S_INITIAL, rep(b, n), b, range(1, b))
        return tables.S_INITIAL[shape]
    return S


def check_lemma_inverse(b: int) -> tuple[bool, str]:
    m = lemma_matrix(b, table_s(b))
    prod = m.dot(lemma_matrix_inverse(b))
    eye = np.eye(b**3, dtype=object)
    if not (prod == eye).all():
        i, j = np.argwhere(prod != eye)[0]
        return _fail(f"entry ({i}, {j}) of M M^-1 is {prod[i, j]}")
    return True, f"{b ** 3} x {b ** 3}"


def check_regularity(b: int, n_stop: int) -> tuple[bool, str]:
    rep_ = verify_regularity(b, n_stop - 1)
    return rep_.ok, str(rep_)


def check_kernel_closure(b: int, n_stop: int) -> tuple[bool, str]:
    lin = build_linear_representation(b)
    S = [s_oracle(b, n) for n in range(b * b * n_stop + b * b)]

    def V(n):
        return np.array([S[n]] + [S[b * n + s] for s in range(b - 1)], dtype=object)

    for n in range(n_stop):
        for s in range(b):
            if not (lin.matrix(s).dot(V(n)) == V(b * n + s)).all():
                return _fail(f"V({b}*{n}+{s}) != mu({s}) V({n})")
    return True, f"n < {n_stop}"


def check_palindromes(b: int, l_max: int) -> tuple[bool, str]:
    lin = build_linear_representation(b)
    for l in range(1, l_max + 1):
        if not palindrome_check(b, l, lin):
            return _fail(f"l={l}")
    return True, f"1 <= l <= {l_max}"


def check_palindrome_words(b: int, max_len: int) -> tuple[bool, str]:
    top = b - 1
    for length in range(max_len + 1):
        u = words_of_length(b, length, canonical=False)
        lead = np.full((len(u), 1), top, dtype=np.int8)
        left = count_canonical_subwords_batch(b, np.hstack([lead, u]))
        right = count_canonical_subwords_batch(b, np.hstack([lead, (top - u).astype(np.int8)]))
        bad = np.flatnonzero(left != right)
        if bad.size:
            return _fail(f"u={tuple(u[bad[0]])}")
    return True, f"|u| <= {max_len}"


# ---- summatory --------------------------------------------------------------

def check_summatory(b: int, n_max: int) -> tuple[bool, str]:
    table = a_prefix_table(b, n_max)
    for n in range(n_max + 1):
        if a_fast(b, n) != table[n]:
            return _fail(f"A({n}): fast {a_fast(b, n)} vs oracle {table[n]}")
        if n and table[n] <= table[n - 1]:
            return _fail(f"A not increasing at {n}")
    return True, f"n <= {n_max}"


def check_closed_forms(b: int, limit: int) -> tuple[bool, str]:
    """Pure-power and two-digit closed forms against oracle prefix sums below ``limit``."""
    table = a_prefix_table(b, limit)
    count = 0
    for l in itertools.count():
        if b**l >= limit:
            break
        for x in range(1, b):
            n = x * b**l
            if n < limit:
                if a_closed_form_pure(b, x, l) != table[n]:
                    return _fail(f"A({x}*{b}^{l})")
                count += 1
            if l >= 1:
                for y in range(1, b):
                    n = x * b**l + y * b ** (l - 1)
                    if n < limit:
                        if a_closed_form_mixed(b, x, y, l) != table[n]:
                            return _fail(f"A({x}*{b}^{l}+{y}*{b}^{l - 1})")
                        count += 1
    return True, f"{count} arguments"


def check_summatory_recurrences(b: int, l_max: int) -> tuple[bool, str]:
    """The three leading-digit recurrences, with r running up to b^(l-1) inclusive."""
    table = a_prefix_table(b, (b - 1) * b**l_max + (b - 1) * b ** (l_max - 1) + b ** (l_max - 1) + 1)
    q = 2 * b - 1
    for l in range(1, l_max + 1):
        p = q ** (l - 1)
        for x in range(1, b):
            for r in range(b ** (l - 1) + 1):
                lhs = table[x * b**l + r]
                if lhs != step_constant(b, x, 0) * p + table[x * b ** (l - 1) + r] + table[r]:
                    return _fail(f"second digit 0: x={x}, l={l}, r={r}")
                lhs = table[x * b**l + x * b ** (l - 1) + r]
                if lhs != step_constant(b, x, x) * p + 2 * table[x * b ** (l - 1) + r] - table[r]:
                    return _fail(f"second digit x: x={x}, l={l}, r={r}")
                for y in range(1, b):
                    if y == x:
                        continue
                    lhs = table[x * b**l + y * b ** (l - 1) + r]
                    rhs = (step_constant(b, x, y) * p + table[x * b ** (l - 1) + r]
                           + 2 * table[y * b ** (l - 1) + r] - 2 * table[r])
                    if lhs != rhs:
                        return _fail(f"second digit y: x={x}, y={y}, l={l}, r={r}")
    return True, f"1 <= l <= {l_max}"


def check_multiplicativity(b: int, n_max: int) -> tuple[bool, str]:
    q = 2 * b - 1
    for n in range(n_max + 1):
        if a_fast(b, b * n) != q * a_fast(b, n):
            return _fail(f"n={n}")
    return True, f"n <= {n_max}"


def check_decompositions(b: int, samples: int, bits: int = 64, seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randrange(b, 1 << bits)
        d = decompose(b, n)
        if d.value() != a_fast(b, n):
            return _fail(f"reconstruction at n={n}")
        if len(d.d) != len(rep(b, n)) - 1 or d.d[0] == 0:
            return _fail(f"shape of the decomposition at n={n}: {d.d}")
    return True, f"{samples} random n < 2^{bits}"


def check_published_decomposition() -> tuple[bool, str]:
    d = decompose(3, 150)
    if d.value() != tables.A3_150:
        return _fail(f"reconstruction {d.value()}")
    if d.d != tables.DECOMPOSITION_3_150:
        return _fail(f"decompose(3, 150) = {d.d}, published {tables.DECOMPOSITION_3_150}")
    return True, str(d.d)


# ---- triangle / asymptotics ---------------------------------------------------

def check_triangle_link(b: int, m_stop: int) -> tuple[bool, str]:
    for m in range(m_stop):
        if row_positive_count(b, m) != s_oracle(b, m):
            return _fail(f"row {m}")
    return True, f"m < {m_stop}"


def check_pascal_embedding(b: int, m_max: int) -> tuple[bool, str]:
    from math import comb

    for a in range(1, b):
        for m in range(m_max + 1):
            for k in range(m + 1):
                if triangle_entry(b, val(b, (a,) * m), val(b, (a,) * k)) != comb(m, k):
                    return _fail(f"a={a}, m={m}, k={k}")
    return True, f"m <= {m_max}"


def check_scaling(b: int, samples: int) -> tuple[bool, str]:
    r = scaling_identity_check(b, samples)
    return r.ok, str(r)


# ---- suites -------------------------------------------------------------------

def _len_for(b: int, n_max: int) -> int:
    return max(1, len(rep(b, n_max)))


def base_suite(b: int, n_max: int | None = None) -> list[tuple[str, Callable, tuple]]:
    """The per-base invariant sweep; ``n_max`` scales every bound."""
    b = check_base(b)
    n_max = n_max if n_max is not None else b**5
    L = _len_for(b, n_max)
    suite = [
        ("round trip rep/val", check_round_trip, (b, n_max + 1)),
        ("oracle = recurrence = matrix product", check_s_routes, (b, L)),
        ("trie node counts", check_s_routes, (b, min(L, 10), True)),
        ("trie block structure", check_trie_structure, (b, min(L, 7))),
        ("leading-letter identities", check_word_lemmas, (b, min(L, 6))),
        ("regularity relations", check_regularity, (b, max(1, n_max // (b * b)))),
        ("kernel closure", check_kernel_closure, (b, max(1, n_max // (b * b)))),
        ("palindromic blocks", check_palindromes, (b, max(1, L - 1))),
        ("palindromic words", check_palindrome_words, (b, min(L, 10))),
        ("summatory fast = oracle", check_summatory, (b, n_max)),
        ("summatory closed forms", check_closed_forms, (b, n_max + 1)),
        ("summatory recurrences", check_summatory_recurrences, (b, max(1, L - 2))),
        ("summatory multiplicativity", check_multiplicativity, (b, n_max)),
        ("decomposition reconstruction", check_decompositions, (b, 100)),
        ("triangle row counts", check_triangle_link, (b, min(n_max + 1, b**4))),
        ("embedded binomial triangles", check_pascal_embedding, (b, min(L + 2, 12))),
        ("scaling identity", check_scaling, (b, 50)),
    ]
    if b >= 3:
        suite.append(("coefficient shape tables", check_coefficient_tables, (b,)))
        suite.append(("block value tables", check_block_values, (b,)))
    suite.append(("initial value table", check_initial_values, (b,)))
    suite.append(("base-case matrix inverse", check_lemma_inverse, (b,)))
    return suite


def run_suite(suite, report: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    results = []
    for name, fn, args in suite:
        res = run_check(name, fn, *args)
        if report:
            report(res)
        results.append(res)
    return results


__all__ = [
    "CheckResult",
    "base_suite",
    "run_check",
    "run_suite",
] + [n for n in dir() if n.startswith("check_")]
