"""
Cell extensions, substitution, unitors and shells

All of these glue molecules along boundaries. Boundary isomorphisms are always
found by search and never assumed from matching ids.
"""

from typing import Dict, Iterable, Tuple

from src.errors import (
    BoundaryMismatch,
    IndexOutOfRange,
    InvariantViolation,
    NotAMap,
    NotSpherical,
    NotSubmolecule,
    Unsupported,
)
from src.maps import OgpMap, check_map, find_unique_iso, identity, pushout_inclusions
from src.molecule import boundary_poset, has_spherical_boundary, is_submolecule, paste, spherical_members
from src.ogposet import (
    SIGNS,
    ClosedSubset,
    OrientedGradedPoset,
    Sign,
    boundary_members,
    build_ogp,
    fresh_name,
    greatest_element,
    restrict,
)
from src.settings import get_logger
from .bundle import ShapeBundle
from .cylinders import cylinder
from .generators import globe
from .products import dual

logger = get_logger(__name__)


def _whole(P: OrientedGradedPoset) -> frozenset:
    return frozenset(range(len(P)))


def _transport(f: OgpMap, target: OrientedGradedPoset) -> OgpMap:
    return check_map(f.source, target, f.by_id())


def boundary_match(U: OrientedGradedPoset, V: OrientedGradedPoset) -> Tuple[OgpMap, OgpMap]:
    """
    Match the boundary of U with the boundary of V, one side at a time

    Returns:
        (rim, match): the inclusion ∂U ↪ U and the isomorphism ∂U ≅ ∂V followed by ∂V ↪ V

    Raises:
        BoundaryMismatch: when the dimensions differ, a side has no isomorphism,
            or the two side isomorphisms disagree where the sides meet
    """
    n = U.dim
    if V.dim != n:
        raise BoundaryMismatch(f"shapes have dimensions {n} and {V.dim}", locus=(n, V.dim))
    rim_shape, rim = boundary_poset(U, n - 1, None)
    assignment: Dict[str, str] = {}
    for alpha in SIGNS:
        side_u, into_u = boundary_poset(U, n - 1, alpha)
        side_v, into_v = boundary_poset(V, n - 1, alpha)
        iso = find_unique_iso(side_u, side_v)
        if iso is None:
            raise BoundaryMismatch(f"{alpha.char}-boundaries are not isomorphic", locus=alpha.char)
        for x in range(len(side_u)):
            name, image = U.id_of(into_u(x)), V.id_of(into_v(iso(x)))
            if assignment.setdefault(name, image) != image:
                raise BoundaryMismatch("boundary isomorphisms disagree", locus=name)
    try:
        match = check_map(rim_shape, V, assignment)
    except NotAMap as e:
        raise BoundaryMismatch(f"boundary isomorphisms do not glue: {e.message}", locus=e.locus) from e
    return rim, match


def _add_top(P: OrientedGradedPoset, dim: int, lower: Iterable[int], upper: Iterable[int]) -> OrientedGradedPoset:
    top = fresh_name(str(dim), set(P.ids))
    elements = [(P.id_of(x), P.dims[x]) for x in range(len(P))] + [(top, dim)]
    covers = [(P.id_of(u), P.id_of(l), s) for u, l, s in P.covers()]
    covers += [(top, P.id_of(x), Sign.MINUS) for x in lower]
    covers += [(top, P.id_of(y), Sign.PLUS) for y in upper]
    return build_ogp(elements, covers)


def cell_extension(U: OrientedGradedPoset, V: OrientedGradedPoset) -> ShapeBundle:
    """
    The atom U ⇒ V

    Glues U and V along their boundaries and adds one element covering the
    top cells of U negatively and those of V positively.

    Args:
        U: Input, a molecule with spherical boundary
        V: Output, a molecule with spherical boundary of the same dimension

    Returns:
        ShapeBundle with 'input': U ↪ U ⇒ V and 'output': V ↪ U ⇒ V

    Raises:
        NotSpherical: when U or V does not have spherical boundary
        BoundaryMismatch: when the boundaries of U and V do not match
    """
    for shape, label in ((U, 'input'), (V, 'output')):
        if not has_spherical_boundary(shape):
            raise NotSpherical(f"{label} of a cell extension must have spherical boundary", locus=label)
    n = U.dim
    rim, match = boundary_match(U, V)
    glued = pushout_inclusions(rim, match)
    cells_u = [glued.j1(x) for x in U.of_dim(n)]
    cells_v = [glued.j2(y) for y in V.of_dim(n)]
    shape = _add_top(glued.shape, n + 1, cells_u, cells_v)
    if not spherical_members(shape, _whole(shape)):
        raise InvariantViolation("cell extension does not have spherical boundary")
    logger.debug("cell extension of dimension %d has %d elements", n + 1, len(shape))
    return ShapeBundle(shape, {'input': _transport(glued.j1, shape), 'output': _transport(glued.j2, shape)})


def boundary_atom(U: OrientedGradedPoset) -> ShapeBundle:
    """
    ⟨U⟩ = ∂⁻U ⇒ ∂⁺U

    Raises:
        Unsupported: when U has dimension below 1
    """
    if U.dim < 1:
        raise Unsupported("boundary atom needs dimension at least 1", locus=U.dim)
    lower, _ = boundary_poset(U, U.dim - 1, Sign.MINUS)
    upper, _ = boundary_poset(U, U.dim - 1, Sign.PLUS)
    return cell_extension(lower, upper)


def compose_atom(U: OrientedGradedPoset) -> ShapeBundle:
    """The composition atom U ⇒ ⟨U⟩, whose output is a single cell"""
    return cell_extension(U, boundary_atom(U).shape)


# ============ Substitution ============

def substitution(U: OrientedGradedPoset, V: ClosedSubset, W: OrientedGradedPoset,
                 assume_submolecule: bool = False) -> ShapeBundle:
    """
    U[W/V]: replace the spherical submolecule V of U by W

    Elements of U outside the interior of V keep their ids. The boundary of W
    takes the ids of the matching boundary of V; the interior of W gets fresh ids.

    Args:
        U: Molecule
        V: Closed subset of U with V ⊑ U and spherical boundary
        W: Molecule with boundaries isomorphic to those of V
        assume_submolecule: Skip the submolecule search for V

    Returns:
        ShapeBundle with 'inclusion': W ↪ U[W/V]

    Raises:
        NotSubmolecule: when V is not a spherical submolecule of U
        BoundaryMismatch: when the boundaries of V and W do not match
    """
    if not assume_submolecule:
        if not is_submolecule(V, U) or not has_spherical_boundary(V):
            raise NotSubmolecule("substituted subset must be a spherical submolecule", locus=V.ids)
    piece, embedding = restrict(U, V)
    k = piece.dim
    _, match = boundary_match(W, piece)
    rim_w = boundary_members(W, _whole(W), k - 1, None)
    interior = V.members - boundary_members(U, V.members, k - 1, None)

    names: Dict[int, str] = {}
    taken = {U.id_of(x) for x in range(len(U)) if x not in interior}
    for w in range(len(W)):
        if w in rim_w:
            continue
        names[w] = fresh_name(W.id_of(w), taken)
        taken.add(names[w])
    rim_source = match.source
    for i in range(len(rim_source)):
        names[W.index_of(rim_source.id_of(i))] = U.id_of(embedding[match(i)])

    elements = [(U.id_of(x), U.dims[x]) for x in range(len(U)) if x not in interior]
    elements += [(names[w], W.dims[w]) for w in range(len(W)) if w not in rim_w]
    covers: Dict[Tuple[str, str], Sign] = {}
    for u, l, s in U.covers():
        if u in interior:
            continue
        if l in interior:
            raise NotSubmolecule(f"{U.id_of(u)} covers the interior of the substituted subset", locus=U.id_of(u))
        covers[(U.id_of(u), U.id_of(l))] = s
    for u, l, s in W.covers():
        key = (names[u], names[l])
        if covers.setdefault(key, s) is not s:
            raise BoundaryMismatch(f"cover {key[0]} -> {key[1]} glued with both signs", locus=key)
    shape = build_ogp(elements, [(u, l, s) for (u, l), s in covers.items()])

    inclusion = check_map(W, shape, [shape.index_of(names[w]) for w in range(len(W))])
    if spherical_members(U, _whole(U)) and not spherical_members(shape, _whole(shape)):
        raise InvariantViolation("substitution into a spherical molecule lost spherical boundary")
    logger.debug("substituted %d elements for %d in %r", len(W), len(V), U)
    return ShapeBundle(shape, {'inclusion': inclusion})


# ============ Unitors ============

def unitor_atom(U: OrientedGradedPoset, V: ClosedSubset, side: Sign = Sign.MINUS,
                flipped: bool = False) -> ShapeBundle:
    """
    Unitor atoms L = U ⇒ (O(V) ∪ U) and R = U ⇒ (U ∪ O(V)) with their retractions onto U

    Args:
        U: Atom of dimension n >= 1
        V: Spherical (n-1)-submolecule of ∂^side U
        side: Sign.MINUS glues O(V) along its output to V ⊑ ∂⁻U (left unitor);
            Sign.PLUS glues it along its input to V ⊑ ∂⁺U (right unitor)
        flipped: Return the (n+1)-dual, whose input and output are swapped

    Returns:
        ShapeBundle with 'retraction' onto U, and 'input', 'output' as in cell_extension

    Raises:
        NotSubmolecule: when V is not a spherical submolecule of the chosen boundary
    """
    top = greatest_element(U.whole())
    if top is None or U.dim < 1:
        raise NotSubmolecule("unitors need an atom of dimension at least 1")
    n = U.dim
    face = ClosedSubset(U, boundary_members(U, _whole(U), n - 1, side))
    if not V.members <= face.members or V.dim != n - 1:
        raise NotSubmolecule(f"subset must be an (n-1)-dimensional part of the {side.char}-boundary", locus=V.ids)
    if not is_submolecule(V, face) or not has_spherical_boundary(V):
        raise NotSubmolecule("subset is not a spherical submolecule of the boundary", locus=V.ids)

    piece, embedding = restrict(U, V)
    cyl = cylinder(piece)
    into_cylinder = cyl['iota_plus'] if side is Sign.MINUS else cyl['iota_minus']
    padded = pushout_inclusions(OgpMap(piece, U, embedding), into_cylinder)
    bundle = cell_extension(U, padded.shape)
    shape = bundle.shape

    assignment: Dict[str, str] = {}

    def put(element: int, image: int) -> None:
        name = shape.id_of(element)
        if assignment.setdefault(name, U.id_of(image)) != U.id_of(image):
            raise InvariantViolation("unitor retraction is not well defined", locus=name)

    put(greatest_element(shape.whole()), top)
    for x in range(len(U)):
        put(bundle['input'](x), x)
        put(bundle['output'](padded.j1(x)), x)
    projection = cyl['projection']
    for c in range(len(cyl.shape)):
        put(bundle['output'](padded.j2(c)), embedding[projection(c)])
    if flipped:
        shape = dual(shape, {n + 1})
    retraction = check_map(shape, U, assignment)
    maps = {'retraction': retraction}
    if flipped:
        maps['input'] = _transport(bundle['output'], shape)
        maps['output'] = _transport(bundle['input'], shape)
    else:
        maps['input'], maps['output'] = bundle['input'], bundle['output']
    return ShapeBundle(shape, maps)


# ============ Shells ============

def _shell_glue(U: OrientedGradedPoset, into_shells: Dict[Sign, Tuple[OgpMap, OgpMap]]) -> ShapeBundle:
    """
    Colimit of Oⁿ⁻¹ ⇒ Ŝ(∂⁻U), U and Ŝ(∂⁺U) ⇒ Oⁿ⁻¹

    into_shells[α] is the pair (∂^α U ↪ U, ∂^α U ↪ Ŝ(∂^α U)).
    """
    n = U.dim
    side_minus, shell_minus = into_shells[Sign.MINUS]
    lower = cell_extension(globe(n - 1), shell_minus.target)
    left = pushout_inclusions(side_minus, shell_minus.then(lower['output']))
    _, shell_plus = into_shells[Sign.PLUS]
    upper = cell_extension(shell_plus.target, globe(n - 1))
    glued = paste(left.shape, upper.shape, n - 1)
    shape = glued.shape
    for alpha in SIGNS:
        side, _ = boundary_poset(shape, n - 1, alpha)
        if find_unique_iso(side, globe(n - 1)) is None:
            raise InvariantViolation(f"{alpha.char}-boundary of a shell is not a globe", locus=alpha.char)
    logger.debug("shell of %r has %d elements", U, len(shape))
    return ShapeBundle(shape, {'inclusion': left.j1.then(glued.j1)})


def shell(U: OrientedGradedPoset) -> ShapeBundle:
    """
    Ŝ(U): a molecule containing U whose boundaries are both Oⁿ⁻¹

    Shapes of dimension at most 1 are their own shells.

    Returns:
        ShapeBundle with 'inclusion': U ↪ Ŝ(U)

    Raises:
        NotSpherical: when U does not have spherical boundary
    """
    if not has_spherical_boundary(U):
        raise NotSpherical("shells need spherical boundary", locus=U.ids)
    n = U.dim
    if n <= 1:
        return ShapeBundle(U, {'inclusion': identity(U)})
    into_shells = {}
    for alpha in SIGNS:
        side, side_inclusion = boundary_poset(U, n - 1, alpha)
        into_shells[alpha] = (side_inclusion, shell(side)['inclusion'])
    return _shell_glue(U, into_shells)


def shell_kcomp(n: int, k: int) -> ShapeBundle:
    """
    Ŝ(Oⁿ #ₖ Oⁿ), built by the shell colimit even though Oⁿ #ₖ Oⁿ is not spherical for k < n-1

    Returns:
        ShapeBundle with 'inclusion': Oⁿ #ₖ Oⁿ ↪ Ŝ(Oⁿ #ₖ Oⁿ)

    Raises:
        IndexOutOfRange: unless 0 <= k < n
    """
    if not 0 <= k < n:
        raise IndexOutOfRange(f"shell of a {k}-composite of {n}-globes needs 0 <= k < n", locus=(n, k))
    composite = paste(globe(n), globe(n), k).shape
    if k == n - 1:
        return shell(composite)
    inner = shell_kcomp(n - 1, k)
    into_shells = {}
    for alpha in SIGNS:
        side, side_inclusion = boundary_poset(composite, n - 1, alpha)
        iso = find_unique_iso(side, inner['inclusion'].source)
        if iso is None:
            raise InvariantViolation(f"{alpha.char}-boundary of a globe composite is not a lower composite")
        into_shells[alpha] = (side_inclusion, iso.then(inner['inclusion']))
    return _shell_glue(composite, into_shells)
