"""
Counting distinct subwords of a base-b expansion
================================================

S_b(n) is the number of distinct scattered subwords of rep_b(n) that are
themselves base-b expansions (no leading zero), the empty word included.
"""

from subwords import build_trie, count_canonical_subwords, level_counts, rep, word_binomial
from subwords.trie import block_factorization, to_dot, verify_structure
from subwords.words import format_word, parse_word

# 16 in base 3 is 121; its subwords are e, 1, 2, 11, 12, 21, 121
w = rep(3, 16)
print(format_word(w), "->", count_canonical_subwords(3, w))

# the trie of subwords has one node per subword, level l holding the length-l ones
t = build_trie(3, w)
print("nodes per level:", level_counts(t))
print(to_dot(t))

# binomial coefficients of words: how often v occurs in u
print("(1111 choose 11) =", word_binomial((1, 1, 1, 1), (1, 1)))
print("(121 choose 12)  =", word_binomial((1, 2, 1), (1, 2)))

# a longer word and its maximal blocks
w = parse_word(3, "22000112")
d = block_factorization(3, w)
print("blocks:", d.blocks)
print("letters after block l:", [sorted(a) for a in d.alph])
t = build_trie(3, w)
print("trie nodes:", len(t), " counted directly:", count_canonical_subwords(3, w))
print("block description of the trie holds:", verify_structure(t, d))

# the first values of S_3
print([count_canonical_subwords(3, rep(3, n)) for n in range(33)])
