"""
Oriented graded posets: representation, closure, boundaries and validity checks
"""

from .core import (
    Sign,
    SIGNS,
    Element,
    OrientedGradedPoset,
    ClosedSubset,
    SubsetProfile,
    ThinnessReport,
    build_ogp,
    closure,
    closure_members,
    boundary,
    boundary_members,
    granular_members,
    element_boundary,
    is_oriented_thin,
    skeleton,
    restrict,
    subset_profile,
    subset_dim,
    maximal_elements,
    maximal_members,
    greatest_element,
    with_flipped_sign,
    rename,
    fresh_name,
    hasse_graph,
)

__all__ = [
    'Sign',
    'SIGNS',
    'Element',
    'OrientedGradedPoset',
    'ClosedSubset',
    'SubsetProfile',
    'ThinnessReport',
    'build_ogp',
    'closure',
    'closure_members',
    'boundary',
    'boundary_members',
    'granular_members',
    'element_boundary',
    'is_oriented_thin',
    'skeleton',
    'restrict',
    'subset_profile',
    'subset_dim',
    'maximal_elements',
    'maximal_members',
    'greatest_element',
    'with_flipped_sign',
    'rename',
    'fresh_name',
    'hasse_graph',
]
