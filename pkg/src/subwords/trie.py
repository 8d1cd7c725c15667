"""The trie of subwords of a word and its maximal-block structure.

The trie is built breadth first from leftmost embeddings: a node u is stored
with the end position of the leftmost occurrence of u as a subword, and its
children are ua for every letter a occurring after that position.  Each
distinct subword is created exactly once.  This is a verification oracle; it
materialises every node and so refuses long words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby
from typing import Sequence

import numpy as np
from numba import njit

from .words import DomainError, Word, check_base, check_word, format_word, is_canonical

DEFAULT_MAX_LENGTH = 20


class TrieTooLarge(DomainError):
    pass


def _next_table(b: int, w: Sequence[int]) -> list[list[int]]:
    """nxt[p][a] = 1 + index of the first a at or after position p, or 0 if none."""
    nxt = [[0] * b for _ in range(len(w) + 1)]
    for p in range(len(w) - 1, -1, -1):
        nxt[p] = nxt[p + 1][:]
        nxt[p][w[p]] = p + 1
    return nxt


@dataclass(frozen=True)
class Trie:
    base: int
    word: Word
    digit: tuple[int, ...]  # edge label into each node (-1 for the root)
    parent: tuple[int, ...]
    level: tuple[int, ...]
    end: tuple[int, ...]  # end of the leftmost embedding of the node label
    children: tuple[dict, ...]  # digit -> child node id
    levels: tuple[tuple[int, ...], ...]

    def label(self, node: int) -> Word:
        out = []
        while node:
            out.append(self.digit[node])
            node = self.parent[node]
        return tuple(reversed(out))

    def find(self, label: Sequence[int]) -> int | None:
        node = 0
        for a in label:
            node = self.children[node].get(a)
            if node is None:
                return None
        return node

    def labels(self) -> set[Word]:
        return {self.label(i) for i in range(len(self.digit))}

    def __len__(self) -> int:
        return len(self.digit)


def build_trie(b: int, w: Sequence[int], max_length: int = DEFAULT_MAX_LENGTH) -> Trie:
    """Trie of the subwords of ``w`` in L_b (root ε, first letters nonzero)."""
    b = check_base(b)
    w = check_word(b, w)
    if len(w) > max_length:
        raise TrieTooLarge(
            f"word of length {len(w)} exceeds the trie size guard ({max_length}); "
            "use count_canonical_subwords instead"
        )
    nxt = _next_table(b, w)
    digit, parent, level, end = [-1], [-1], [0], [0]
    children: list[dict] = [{}]
    levels = [[0]]
    frontier = [0]
    while frontier:
        new = []
        for node in frontier:
            row = nxt[end[node]]
            for a in range(1 if node == 0 else 0, b):
                if row[a]:
                    child = len(digit)
                    digit.append(a)
                    parent.append(node)
                    level.append(level[node] + 1)
                    end.append(row[a])
                    children.append({})
                    children[node][a] = child
                    new.append(child)
        if new:
            levels.append(new)
        frontier = new
    return Trie(
        base=b,
        word=w,
        digit=tuple(digit),
        parent=tuple(parent),
        level=tuple(level),
        end=tuple(end),
        children=tuple(children),
        levels=tuple(tuple(lv) for lv in levels),
    )


def node_count(t: Trie) -> int:
    return len(t.digit)


def level_counts(t: Trie) -> list[int]:
    return [len(lv) for lv in t.levels]


def to_dot(t: Trie) -> str:
    """Graphviz rendering; node names are the subword labels."""
    lines = [f'digraph "T({format_word(t.word)})" {{', "  node [shape=circle, fontsize=10];"]
    for i in range(len(t.digit)):
        lines.append(f'  n{i} [label="{format_word(t.label(i))}"];')
    for i in range(1, len(t.digit)):
        lines.append(f'  n{t.parent[i]} -> n{i} [label="{t.digit[i]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal-block factorisation w = a_1^{n_1} ... a_M^{n_M}.

    Block indices are 1-based as in the usual notation: ``letter(k)`` is a_k.
    ``alph[l]`` is the set of letters of a_{l+1} ... a_M and
    ``first_index[(a, l)]`` the smallest k > l with a_k = a.
    """

    base: int
    word: Word
    blocks: tuple[tuple[int, int], ...]
    alph: tuple[frozenset, ...] = field(repr=False)
    first_index: dict = field(repr=False)

    @property
    def M(self) -> int:
        return len(self.blocks)

    def letter(self, k: int) -> int:
        return self.blocks[k - 1][0]

    def multiplicity(self, k: int) -> int:
        return self.blocks[k - 1][1]

    def prefix(self, l: int, i: int) -> Word:
        """a_1^{n_1} ... a_l^{n_l} a_{l+1}^i"""
        out: list[int] = []
        for a, n in self.blocks[:l]:
            out.extend([a] * n)
        if i:
            out.extend([self.letter(l + 1)] * i)
        return tuple(out)


def block_factorization(b: int, w: Sequence[int]) -> BlockDecomposition:
    b = check_base(b)
    w = check_word(b, w)
    if not w or not is_canonical(b, w):
        raise DomainError("block factorisation needs a nonempty word starting with a nonzero digit")
    blocks = tuple((a, len(list(g))) for a, g in groupby(w))
    M = len(blocks)
    alph = tuple(frozenset(a for a, _ in blocks[l:]) for l in range(M))
    first_index = {}
    for l in range(M):
        for k in range(M, l, -1):
            first_index[(blocks[k - 1][0], l)] = k
    return BlockDecomposition(b, w, blocks, alph, first_index)


def _shape_ids(t: Trie) -> list[int]:
    """Canonical id per node; equal ids <=> isomorphic edge-labelled subtrees."""
    ids = [0] * len(t.digit)
    table: dict = {}
    for lv in reversed(t.levels):
        for node in lv:
            key = tuple(sorted((a, ids[c]) for a, c in t.children[node].items()))
            ids[node] = table.setdefault(key, len(table))
    return ids


def verify_structure(t: Trie, d: BlockDecomposition) -> bool:
    """Check the block description of the trie node by node.

    (i) the root has children exactly Alph(0)\\{0}, child a rooting a copy of
    T_{j(a,0)-1}; (ii) each node a_1^{n_1}...a_l^{n_l}a_{l+1}^i with
    (l, i) != (0, 0) has children exactly x a for a in Alph(l), and x a roots
    a copy of T_{j(a,l)-1} whenever a != a_{l+1}.  T_l is the subtree at
    a_1^{n_1}...a_l^{n_l}a_{l+1}.
    """
    if t.word != d.word or t.base != d.base:
        raise DomainError("trie and block decomposition come from different words")
    ids = _shape_ids(t)
    M = d.M

    def subtree_root(l: int) -> int | None:
        return t.find(d.prefix(l, 1))

    roots = [subtree_root(l) for l in range(M)]
    if any(r is None for r in roots):
        return False
    # T_M (empty) is never referenced: j(a, l) - 1 <= M - 1 always.

    expected_root = d.alph[0] - {0}
    if set(t.children[0]) != expected_root:
        return False
    for a in expected_root:
        if ids[t.children[0][a]] != ids[roots[d.first_index[(a, 0)] - 1]]:
            return False

    for l in range(M):
        for i in range(d.multiplicity(l + 1)):
            if (l, i) == (0, 0):
                continue
            x = t.find(d.prefix(l, i))
            if x is None or set(t.children[x]) != set(d.alph[l]):
                return False
            for a, child in t.children[x].items():
                if a != d.letter(l + 1) and ids[child] != ids[roots[d.first_index[(a, l)] - 1]]:
                    return False
    return True


def trie_node_counts(b: int, words: np.ndarray) -> np.ndarray:
    """Node counts of the tries of many same-length words, walked node by node.

    Compiled form of :func:`build_trie`: a depth-first walk over leftmost
    embeddings that visits (and counts) every node of every trie without
    storing labels.  Cost is proportional to the total number of nodes.
    """
    b = check_base(b)
    words = np.ascontiguousarray(words, dtype=np.int8)
    if words.ndim != 2:
        raise DomainError("words must be a 2-d array")
    return _walk_counts(words, b)


@njit(cache=True)
def _walk_counts(words, b):
    W, L = words.shape
    out = np.empty(W, np.int64)
    nxt = np.empty((L + 1, b), np.int32)
    stack = np.empty((L + 1) * b + 1, np.int32)
    for w in range(W):
        for a in range(b):
            nxt[L, a] = -1
        for p in range(L - 1, -1, -1):
            for a in range(b):
                nxt[p, a] = nxt[p + 1, a]
            nxt[p, words[w, p]] = p + 1
        total = 1
        sp = 0
        for a in range(1, b):
            if nxt[0, a] >= 0:
                stack[sp] = nxt[0, a]
                sp += 1
        while sp:
            sp -= 1
            e = stack[sp]
            total += 1
            for a in range(b):
                f = nxt[e, a]
                if f == L:
                    total += 1  # a leaf: counted without being pushed
                elif f >= 0:
                    stack[sp] = f
                    sp += 1
        out[w] = total
    return out
