"""
Code families: parameters, membership, enumeration and verification
"""

from .families import (
    Family,
    Congruence,
    CodeFamilySpec,
    derive_params,
)
from .codebook import (
    EnumeratedCode,
    ResidueSearch,
    is_member,
    enumerate_code,
    ambient_size,
    residue_search,
    best_residues,
    pigeonhole_redundancy,
    verify_family,
)

__all__ = [
    'Family',
    'Congruence',
    'CodeFamilySpec',
    'derive_params',
    'EnumeratedCode',
    'ResidueSearch',
    'is_member',
    'enumerate_code',
    'ambient_size',
    'residue_search',
    'best_residues',
    'pigeonhole_redundancy',
    'verify_family',
]
