"""Distinct scattered subwords of base-b expansions.

S_b(n) counts the distinct subwords of rep_b(n) that are themselves base-b
expansions; A_b(n) is its summatory function.  The package computes both
exactly along several independent routes and checks them against each other.
"""

from .asymptotics import phi, sample_h, scaling_identity_check
from .pascal import compressed_profile, render_triangle, row_positive_count, triangle_entry
from .regular import (
    LinearRepresentation,
    RegularityCoefficients,
    build_linear_representation,
    palindrome_check,
    s_fast,
    s_oracle,
    s_recurrence,
    solve_coefficients,
    verify_regularity,
)
from .summatory import (
    Decomposition,
    a_closed_form_mixed,
    a_closed_form_pure,
    a_fast,
    a_oracle,
    check_multiplicativity,
    decompose,
)
from .trie import BlockDecomposition, Trie, block_factorization, build_trie, level_counts, node_count, verify_structure
from .words import (
    DomainError,
    count_canonical_subwords,
    digit_complement,
    is_canonical,
    normalize,
    parse_word,
    rep,
    val,
    word_binomial,
)

__version__ = "0.1.0"
