"""
Cylinders O(U) and U_C, their action on surjections, and fattened maps

U_C is the quotient of O¹ ⊗ U identifying -⊗x, 1⊗x and +⊗x for every x in C.
Collapsed classes keep the id of x; the others are named "-⊗x", "+⊗x", "1⊗x".
"""

from typing import Dict, Iterable, Tuple, Union

import networkx as nx

from src.errors import DiagramError, InvariantViolation, PreconditionFailed, QuotientInvalid
from src.maps import OgpMap, check_map
from src.ogposet import ClosedSubset, OrientedGradedPoset, Sign, boundary_members, build_ogp, greatest_element
from src.settings import get_logger
from .bundle import ShapeBundle
from .generators import arrow
from .products import gray_pairs

logger = get_logger(__name__)


def relative_cylinder(U: OrientedGradedPoset, C: Union[ClosedSubset, Iterable[int], None] = None) -> ShapeBundle:
    """
    U_C: the cylinder on U with its sides squashed along C

    Args:
        U: Molecule
        C: Closed subset of ∂U to collapse; None collapses all of ∂U, giving O(U)

    Returns:
        ShapeBundle with 'iota_minus', 'iota_plus': U -> U_C and 'projection': U_C ->> U

    Raises:
        PreconditionFailed: when C is not a closed subset of ∂U
        QuotientInvalid: when the quotient does not inherit a consistent orientation
    """
    whole = frozenset(range(len(U)))
    rim = boundary_members(U, whole, U.dim - 1, None)
    if C is None:
        collapsed = rim
    else:
        collapsed = C.members if isinstance(C, ClosedSubset) else frozenset(C)
    if not collapsed <= rim or any(not U.down(x) <= collapsed for x in collapsed):
        raise PreconditionFailed("collapsed subset must be closed and contained in the boundary")

    I = arrow()
    minus, plus, one = I.index_of("-"), I.index_of("+"), I.index_of("1")
    product, pairs = gray_pairs(I, U, lambda o, x: f"{o}⊗{x}")

    identified = nx.Graph()
    identified.add_nodes_from(range(len(product)))
    for x in collapsed:
        identified.add_edge(pairs[(minus, x)], pairs[(one, x)])
        identified.add_edge(pairs[(one, x)], pairs[(plus, x)])
    classes = sorted((sorted(c) for c in nx.connected_components(identified)), key=lambda c: c[0])
    coordinates = {e: pair for pair, e in pairs.items()}

    cls: Dict[int, int] = {}
    names, dims = [], []
    for i, members in enumerate(classes):
        for e in members:
            cls[e] = i
        if len(members) > 1:
            names.append(U.id_of(coordinates[members[0]][1]))
        else:
            names.append(product.id_of(members[0]))
        dims.append(min(product.dims[e] for e in members))

    covers: Dict[Tuple[int, int], Sign] = {}
    for u, l, s in product.covers():
        o, x = coordinates[u]
        if o == one and x in collapsed:
            continue
        cu, cl = cls[u], cls[l]
        if cu == cl or dims[cu] != dims[cl] + 1:
            continue
        if covers.setdefault((cu, cl), s) is not s:
            raise QuotientInvalid(f"cover {names[cu]} -> {names[cl]} inherits both signs", locus=(names[cu], names[cl]))

    try:
        shape = build_ogp([(name, dim) for name, dim in zip(names, dims)],
                          [(names[cu], names[cl], s) for (cu, cl), s in covers.items()])
        maps = {}
        for side, label in ((minus, 'iota_minus'), (plus, 'iota_plus')):
            maps[label] = check_map(U, shape, {U.id_of(x): names[cls[pairs[(side, x)]]] for x in range(len(U))})
        projection = {names[cls[e]]: U.id_of(x) for (o, x), e in pairs.items()}
        maps['projection'] = check_map(shape, U, projection)
    except DiagramError as e:
        raise QuotientInvalid(f"cylinder quotient is invalid: {e}", locus=e.locus) from e
    logger.debug("cylinder on %r collapsing %d elements has %d elements", U, len(collapsed), len(shape))
    return ShapeBundle(shape, maps)


def cylinder(U: OrientedGradedPoset) -> ShapeBundle:
    """O(U) = U_∂U with p_U, ι⁻ and ι⁺"""
    return relative_cylinder(U)


class CylinderCoordinates:
    """Reads each element of O(U) as (o, x) with o in '-', '+', '1' or '0' for collapsed"""

    def __init__(self, bundle: ShapeBundle):
        self.bundle = bundle
        shape = bundle.shape
        minus, plus, projection = bundle['iota_minus'], bundle['iota_plus'], bundle['projection']
        self.coordinates: Dict[int, Tuple[str, int]] = {}
        self.middle: Dict[int, int] = {}
        for e in range(len(shape)):
            x = projection(e)
            if minus(x) == e and plus(x) == e:
                self.coordinates[e] = ('0', x)
            elif minus(x) == e:
                self.coordinates[e] = ('-', x)
            elif plus(x) == e:
                self.coordinates[e] = ('+', x)
            else:
                self.coordinates[e] = ('1', x)
                self.middle[x] = e

    def element(self, o: str, x: int) -> int:
        if o == '+':
            return self.bundle['iota_plus'](x)
        if o == '1' and x in self.middle:
            return self.middle[x]
        return self.bundle['iota_minus'](x)


def _require_atom(P: OrientedGradedPoset, label: str) -> int:
    top = greatest_element(P.whole())
    if top is None:
        raise PreconditionFailed(f"{label} must be an atom")
    return top


def cylinder_map(f: OgpMap) -> OgpMap:
    """
    O(f): O(U) ->> O(V) for a surjection of atoms of equal dimension

    Raises:
        PreconditionFailed: unless f is a dimension-preserving surjection of atoms
    """
    U, V = f.source, f.target
    _require_atom(U, "source")
    _require_atom(V, "target")
    if not f.is_surjective() or U.dim != V.dim:
        raise PreconditionFailed("cylinder_map needs a surjection of atoms of equal dimension")
    source, target = cylinder(U), cylinder(V)
    coords_u, coords_v = CylinderCoordinates(source), CylinderCoordinates(target)
    assignment = []
    for e in range(len(source.shape)):
        o, x = coords_u.coordinates[e]
        assignment.append(coords_v.element(o, f(x)))
    result = check_map(source.shape, target.shape, assignment)
    if source['projection'].then(f) != result.then(target['projection']):
        raise InvariantViolation("cylinder of a surjection does not commute with the projections")
    return result


def fattening(f: OgpMap) -> OgpMap:
    """
    f≺: U -> O(V) for a surjection of atoms with dim U = dim V + 1

    The top goes to the middle cell, input-boundary elements to the - copy of V
    and the rest to the + copy; f≺ followed by the projection is f.

    Raises:
        PreconditionFailed: unless f is a surjection of atoms dropping dimension by one
    """
    U, V = f.source, f.target
    top = _require_atom(U, "source")
    top_v = _require_atom(V, "target")
    if not f.is_surjective() or U.dim != V.dim + 1:
        raise PreconditionFailed("fattening needs a surjection of atoms dropping dimension by one")
    bundle = cylinder(V)
    coords = CylinderCoordinates(bundle)
    lower = boundary_members(U, frozenset(range(len(U))), U.dim - 1, Sign.MINUS)
    assignment = []
    for x in range(len(U)):
        if x == top:
            assignment.append(coords.element('1', top_v))
        elif x in lower:
            assignment.append(bundle['iota_minus'](f(x)))
        else:
            assignment.append(bundle['iota_plus'](f(x)))
    result = check_map(U, bundle.shape, assignment)
    if result.then(bundle['projection']) != f:
        raise InvariantViolation("fattened map does not project back to the original")
    return result
