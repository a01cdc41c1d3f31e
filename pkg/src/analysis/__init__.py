"""
Pair analysis: read-distance characterization of confusable words
"""

from .characterize import (
    SwapBlock,
    PairStructure,
    D4Case,
    D4Shape,
    L3Structure,
    Transform,
    decompose_pair,
    predicted_distance,
    classify_d4,
    alternating_swap,
    l3_confusable,
    window_span,
)

__all__ = [
    'SwapBlock',
    'PairStructure',
    'D4Case',
    'D4Shape',
    'L3Structure',
    'Transform',
    'decompose_pair',
    'predicted_distance',
    'classify_d4',
    'alternating_swap',
    'l3_confusable',
    'window_span',
]
