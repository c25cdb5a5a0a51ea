"""
Molecules: recognition, decomposition witnesses, sphericity, directed-complex
checks, layerings, binary splits, merger trees and pasting
"""

from .recognition import (
    DecompositionWitness,
    BinarySplit,
    MergerTree,
    ComplexReport,
    as_subset,
    is_atom,
    is_molecule,
    check_witness,
    exhaustive_molecule_check,
    is_submolecule,
    is_spherical_submolecule,
    has_spherical_boundary,
    spherical_members,
    check_complex,
    layering,
    binary_splits,
    merger_tree,
    precedence_graph,
    candidate_splits,
)
from .pasting import paste, boundary_poset

__all__ = [
    'DecompositionWitness',
    'BinarySplit',
    'MergerTree',
    'ComplexReport',
    'as_subset',
    'is_atom',
    'is_molecule',
    'check_witness',
    'exhaustive_molecule_check',
    'is_submolecule',
    'is_spherical_submolecule',
    'has_spherical_boundary',
    'spherical_members',
    'check_complex',
    'layering',
    'binary_splits',
    'merger_tree',
    'precedence_graph',
    'candidate_splits',
    'paste',
    'boundary_poset',
]
