"""
Shape constructions: generators, products and joins, duals, cell extensions,
substitution, cylinders, unitors, shells, the simplex-to-globe maps, the
extraction molecules and horns
"""

from .bundle import ShapeBundle
from .generators import (
    KINDS,
    empty,
    point,
    globe,
    globe_inclusion,
    simplex,
    arrow,
    cube,
    comp_globe,
    generate,
)
from .products import (
    suspension,
    suspension_map,
    gray_product,
    gray_map,
    join,
    join_map,
    word_naming,
    dual,
    dual_map,
    dual_dims,
)
from .cylinders import relative_cylinder, cylinder, cylinder_map, fattening, CylinderCoordinates
from .cells import (
    boundary_match,
    cell_extension,
    boundary_atom,
    compose_atom,
    substitution,
    unitor_atom,
    shell,
    shell_kcomp,
)
from .simplices import (
    A_MODES,
    coface,
    codegeneracy,
    a_word,
    a_map,
    check_a_faces,
    c_word,
    c_map,
    check_c_diagrams,
)
from .extraction import (
    iterated_cylinder,
    iterated_fattening,
    extr,
    check_retraction_diagram,
    check_simplex_diagram,
)
from .horns import HORN_KINDS, Horn, TernaryParts, horns, ternary_parts
from .catalogue import FIXTURES, fixture, fixture_names

__all__ = [
    'ShapeBundle',
    'KINDS',
    'empty',
    'point',
    'globe',
    'globe_inclusion',
    'simplex',
    'arrow',
    'cube',
    'comp_globe',
    'generate',
    'suspension',
    'suspension_map',
    'gray_product',
    'gray_map',
    'join',
    'join_map',
    'word_naming',
    'dual',
    'dual_map',
    'dual_dims',
    'relative_cylinder',
    'cylinder',
    'cylinder_map',
    'fattening',
    'CylinderCoordinates',
    'boundary_match',
    'cell_extension',
    'boundary_atom',
    'compose_atom',
    'substitution',
    'unitor_atom',
    'shell',
    'shell_kcomp',
    'A_MODES',
    'coface',
    'codegeneracy',
    'a_word',
    'a_map',
    'check_a_faces',
    'c_word',
    'c_map',
    'check_c_diagrams',
    'iterated_cylinder',
    'iterated_fattening',
    'extr',
    'check_retraction_diagram',
    'check_simplex_diagram',
    'HORN_KINDS',
    'Horn',
    'TernaryParts',
    'horns',
    'ternary_parts',
    'FIXTURES',
    'fixture',
    'fixture_names',
]
