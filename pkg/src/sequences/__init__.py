"""
Sequence primitives: words, read vectors, syndromes and batch kernels
"""

from .seqcore import (
    MAX_ALPHABET,
    Word,
    Multiset,
    ReadVector,
    SyndromeVector,
    read_vector,
    read_to_word,
    read_distance,
    hamming_distance,
    vt_syndrome,
    inversion_number,
    indicator,
    indicator_inverse,
    odd_subword,
    even_subword,
    alternating,
    max_alternating_run,
    in_all,
    is_good,
    q_ell,
    multiset_rank,
    multiset_unrank,
    phi_map,
    phi_inverse,
    all_words,
)

__all__ = [
    'MAX_ALPHABET',
    'Word',
    'Multiset',
    'ReadVector',
    'SyndromeVector',
    'read_vector',
    'read_to_word',
    'read_distance',
    'hamming_distance',
    'vt_syndrome',
    'inversion_number',
    'indicator',
    'indicator_inverse',
    'odd_subword',
    'even_subword',
    'alternating',
    'max_alternating_run',
    'in_all',
    'is_good',
    'q_ell',
    'multiset_rank',
    'multiset_unrank',
    'phi_map',
    'phi_inverse',
    'all_words',
]
