"""
Maps of oriented graded posets: validation, hom-set enumeration, isomorphisms,
factorizations, pushouts of inclusions and cell classification
"""

from .core import (
    OgpMap,
    Pushout,
    Factorization,
    CellClassification,
    check_map,
    identity,
    subset_inclusion,
    skeleton_inclusion,
    boundary_inclusion,
    enumerate_maps,
    find_isomorphisms,
    find_unique_iso,
    image_factorization,
    pushout_inclusions,
    reverse_surjection,
    classify_cell,
    find_reducing_factorization,
)

__all__ = [
    'OgpMap',
    'Pushout',
    'Factorization',
    'CellClassification',
    'check_map',
    'identity',
    'subset_inclusion',
    'skeleton_inclusion',
    'boundary_inclusion',
    'enumerate_maps',
    'find_isomorphisms',
    'find_unique_iso',
    'image_factorization',
    'pushout_inclusions',
    'reverse_surjection',
    'classify_cell',
    'find_reducing_factorization',
]
