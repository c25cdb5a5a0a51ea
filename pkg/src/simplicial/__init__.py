"""
Nerves of posets, integer chain complexes, Smith normal form, homology and
Euler characteristics
"""

from .nerve import (
    Chain,
    OrderedComplex,
    LastVertexMap,
    order_graph,
    nerve,
    last_vertex,
    last_vertex_map,
    chain_image,
)
from .smith import SmithForm, as_integer_matrix, integer_identity, smith_decomposition, smith_normal_form
from .homology import HomologySummary, EulerCharacteristic, boundary_matrices, homology, euler

__all__ = [
    'Chain',
    'OrderedComplex',
    'LastVertexMap',
    'order_graph',
    'nerve',
    'last_vertex',
    'last_vertex_map',
    'chain_image',
    'SmithForm',
    'as_integer_matrix',
    'integer_identity',
    'smith_decomposition',
    'smith_normal_form',
    'HomologySummary',
    'EulerCharacteristic',
    'boundary_matrices',
    'homology',
    'euler',
]
