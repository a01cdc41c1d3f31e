"""
Bounds: the clique cover, Hamming and Levenshtein bounds, reconstruction sizes
"""

from .clique_cover import (
    CliqueCover,
    g_sequence,
    build_clique_cover,
    clique_cover_count,
    clique_cover_size,
)
from .bounds import (
    BoundReport,
    hamming_bound_redundancy,
    levenshtein_N,
    read_recon_upper,
    prescribed_t,
    redundancy_lower_bound_d3,
    asymptotic_trends,
    bound_reports,
    reports_frame,
)

__all__ = [
    'CliqueCover',
    'g_sequence',
    'build_clique_cover',
    'clique_cover_count',
    'clique_cover_size',
    'BoundReport',
    'hamming_bound_redundancy',
    'levenshtein_N',
    'read_recon_upper',
    'prescribed_t',
    'redundancy_lower_bound_d3',
    'asymptotic_trends',
    'bound_reports',
    'reports_frame',
]
