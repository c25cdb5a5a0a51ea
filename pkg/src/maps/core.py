"""
Maps of oriented graded posets

A map is a function between element sets that commutes with every boundary
operator: f(∂ₙ^α clos{x}) = ∂ₙ^α clos{f(x)}. Maps are stored as an index
assignment but compared and printed by element id, so maps between separately
built copies of the same shape agree.
"""

from dataclasses import dataclass
from itertools import islice
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from networkx.algorithms.isomorphism import DiGraphMatcher

from src.errors import (
    HostMismatch,
    InvariantViolation,
    NotAMap,
    NotUnique,
    OrientationConflict,
    PreconditionFailed,
    SizeLimit,
    UnknownIndex,
)
from src.ogposet import (
    SIGNS,
    ClosedSubset,
    OrientedGradedPoset,
    boundary_members,
    build_ogp,
    element_boundary,
    fresh_name,
    greatest_element,
    hasse_graph,
    restrict,
)
from src.settings import get_enumeration_limit, get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class OgpMap:
    """Validated map of oriented graded posets; build with check_map"""

    source: OrientedGradedPoset
    target: OrientedGradedPoset
    assignment: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.assignment[x]

    def apply_id(self, name: str) -> str:
        return self.target.id_of(self.assignment[self.source.index_of(name)])

    def image(self, S: Optional[Iterable[int]] = None) -> frozenset:
        if S is None:
            return frozenset(self.assignment)
        return frozenset(self.assignment[x] for x in S)

    def by_id(self) -> Dict[str, str]:
        return {self.source.id_of(x): self.target.id_of(y) for x, y in enumerate(self.assignment)}

    def then(self, other: 'OgpMap') -> 'OgpMap':
        """
        Diagrammatic composite self;other

        Raises:
            HostMismatch: when other does not start where self ends
        """
        if other.source is self.target:
            return OgpMap(self.source, other.target, tuple(other.assignment[y] for y in self.assignment))
        if other.source != self.target:
            raise HostMismatch("maps are not composable", locus=(repr(self.target), repr(other.source)))
        translate = [other.source.index_of(name) for name in self.target.ids]
        return OgpMap(self.source, other.target, tuple(other.assignment[translate[y]] for y in self.assignment))

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def is_surjective(self) -> bool:
        return len(set(self.assignment)) == len(self.target)

    def is_inclusion(self) -> bool:
        return self.is_injective()

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def __eq__(self, other) -> bool:
        if not isinstance(other, OgpMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.by_id() == other.by_id()

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.by_id().items())))

    def __repr__(self) -> str:
        return f"OgpMap({self.by_id()})"


class Pushout(NamedTuple):
    shape: OrientedGradedPoset
    j1: OgpMap
    j2: OgpMap


class Factorization(NamedTuple):
    surjection: OgpMap
    inclusion: OgpMap


class CellClassification(NamedTuple):
    kind: str
    surjection: OgpMap
    inclusion: OgpMap


# ============ Validation ============

def _normalize_assignment(source: OrientedGradedPoset, target: OrientedGradedPoset,
                          assignment: Union[Sequence[int], Dict[str, str]]) -> Tuple[int, ...]:
    if isinstance(assignment, dict):
        missing = [name for name in source.ids if name not in assignment]
        if missing:
            raise NotAMap(f"assignment is not total, missing {missing[0]!r}", locus=missing[0])
        try:
            return tuple(target.index_of(assignment[name]) for name in source.ids)
        except UnknownIndex as e:
            raise NotAMap(f"assignment hits unknown target element {e.locus!r}", locus=e.locus) from None
    values = tuple(assignment)
    if len(values) != len(source):
        raise NotAMap(f"assignment has {len(values)} entries for {len(source)} elements")
    for y in values:
        if not isinstance(y, int) or not 0 <= y < len(target):
            raise NotAMap(f"assignment hits unknown target index {y!r}", locus=y)
    return values


def _commutes_at(source: OrientedGradedPoset, target: OrientedGradedPoset,
                 assignment: Sequence[int], x: int) -> Optional[Tuple[int, str]]:
    y = assignment[x]
    for n in range(source.dims[x] + 1):
        for alpha in SIGNS:
            image = frozenset(assignment[z] for z in element_boundary(source, x, n, alpha))
            if image != element_boundary(target, y, n, alpha):
                return n, alpha.char
    return None


def check_map(source: OrientedGradedPoset, target: OrientedGradedPoset,
              assignment: Union[Sequence[int], Dict[str, str]]) -> OgpMap:
    """
    Validate an assignment as a map of oriented graded posets

    Args:
        source: Domain
        target: Codomain
        assignment: Target index for every source index, or a source id -> target id dict

    Returns:
        OgpMap

    Raises:
        NotAMap: with locus (element id, n, sign) at the first failing boundary
    """
    values = _normalize_assignment(source, target, assignment)
    for x in range(len(source)):
        failure = _commutes_at(source, target, values, x)
        if failure is not None:
            n, alpha = failure
            raise NotAMap(
                f"boundary {n}{alpha} of {source.id_of(x)} is not preserved", locus=(source.id_of(x), n, alpha)
            )
    return OgpMap(source, target, values)


def identity(P: OrientedGradedPoset) -> OgpMap:
    return OgpMap(P, P, tuple(range(len(P))))


def subset_inclusion(P: OrientedGradedPoset, U: Union[ClosedSubset, Iterable[int]]) -> OgpMap:
    """Inclusion of a closed subset, viewed as a poset of its own, into P"""
    Q, embedding = restrict(P, U)
    return OgpMap(Q, P, embedding)


def skeleton_inclusion(P: OrientedGradedPoset, n: int) -> OgpMap:
    return subset_inclusion(P, [x for x in range(len(P)) if P.dims[x] <= n])


def boundary_inclusion(P: OrientedGradedPoset, n: int, side) -> OgpMap:
    """Inclusion of ∂ₙ^α P into P; side None gives the whole n-boundary"""
    return subset_inclusion(P, boundary_members(P, frozenset(range(len(P))), n, side))


# ============ Enumeration ============

def _search_order(P: OrientedGradedPoset) -> List[int]:
    """Top-down order in which every element follows one of its neighbours when possible"""
    remaining = set(range(len(P)))
    placed_neighbours = [0] * len(P)
    order: List[int] = []
    while remaining:
        x = max(remaining, key=lambda z: (placed_neighbours[z], P.dims[z], -z))
        remaining.discard(x)
        order.append(x)
        for z in list(P.faces(x)) + list(P.cofaces(x)):
            placed_neighbours[z] += 1
    return order


def _iter_maps(U: OrientedGradedPoset, V: OrientedGradedPoset) -> Iterator[Tuple[int, ...]]:
    order = _search_order(U)
    position = {x: i for i, x in enumerate(order)}
    # elements whose closure is fully assigned once order[i] is placed
    completes: List[List[int]] = [[] for _ in order]
    for z in range(len(U)):
        completes[max(position[w] for w in U.down(z))].append(z)

    assignment: List[Optional[int]] = [None] * len(U)
    target_all = range(len(V))

    def candidates(x: int) -> Iterable[int]:
        pool = None
        for w in U.cofaces(x):
            if assignment[w] is not None:
                below = V.down(assignment[w])
                pool = below if pool is None else pool & below
        for v in U.faces(x):
            if assignment[v] is not None:
                above = V.up(assignment[v])
                pool = above if pool is None else pool & above
        pool = target_all if pool is None else sorted(pool)
        return [y for y in pool if V.dims[y] <= U.dims[x]]

    def extend(i: int) -> Iterator[Tuple[int, ...]]:
        if i == len(order):
            yield tuple(assignment)
            return
        x = order[i]
        for y in candidates(x):
            assignment[x] = y
            if all(_commutes_at(U, V, assignment, z) is None for z in completes[i]):
                yield from extend(i + 1)
        assignment[x] = None

    yield from extend(0)


def _iter_matches(U: OrientedGradedPoset, V: OrientedGradedPoset, bijective: bool) -> Iterator[Tuple[int, ...]]:
    matcher = DiGraphMatcher(
        hasse_graph(V), hasse_graph(U),
        node_match=lambda a, b: a['dim'] == b['dim'],
        edge_match=lambda a, b: a['sign'] == b['sign'],
    )
    matches = matcher.isomorphisms_iter() if bijective else matcher.subgraph_isomorphisms_iter()
    for match in matches:
        # match sends V elements to U elements
        assignment = [0] * len(U)
        for y, x in match.items():
            assignment[x] = y
        if bijective or all(len(U.faces(x)) == len(V.faces(assignment[x])) for x in range(len(U))):
            yield tuple(assignment)


def enumerate_maps(U: OrientedGradedPoset, V: OrientedGradedPoset, inclusions_only: bool = False,
                   limit: Optional[int] = None) -> List[OgpMap]:
    """
    All maps U -> V, by backtracking over dimension-compatible assignments

    Args:
        U: Source
        V: Target
        inclusions_only: Keep only injective maps
        limit: Largest accepted shape size. If None, uses DGS_ENUMERATION_LIMIT

    Returns:
        Maps sorted by assignment

    Raises:
        SizeLimit: when U or V exceeds the limit
    """
    limit = get_enumeration_limit(limit)
    if len(U) > limit or len(V) > limit:
        raise SizeLimit(f"hom-set enumeration limited to {limit} elements", locus=(len(U), len(V)))
    if inclusions_only:
        found = sorted(set(_iter_matches(U, V, bijective=False)))
    else:
        found = sorted(_iter_maps(U, V))
    logger.debug("enumerated %d maps %r -> %r", len(found), U, V)
    return [check_map(U, V, assignment) for assignment in found]


def find_isomorphisms(U: OrientedGradedPoset, V: OrientedGradedPoset, limit: Optional[int] = None) -> List[OgpMap]:
    """
    Isomorphisms U -> V, matching the signed Hasse diagrams

    Args:
        limit: Stop after this many; None for all

    Returns:
        List of isomorphisms in discovery order
    """
    if len(U) != len(V) or sorted(U.dims) != sorted(V.dims):
        return []
    if len(U.covers()) != len(V.covers()):
        return []
    if not len(U):
        return [OgpMap(U, V, ())]
    found = islice(_iter_matches(U, V, bijective=True), limit)
    return [OgpMap(U, V, assignment) for assignment in found]


def find_unique_iso(U: OrientedGradedPoset, V: OrientedGradedPoset) -> Optional[OgpMap]:
    """
    The isomorphism U -> V if there is one

    Molecules are rigid, so for molecules the result is unique when it exists.

    Raises:
        NotUnique: when a second isomorphism turns up
    """
    found = find_isomorphisms(U, V, limit=2)
    if len(found) > 1:
        raise NotUnique("shapes have more than one isomorphism", locus=(found[0].by_id(), found[1].by_id()))
    return found[0] if found else None


# ============ Factorization and pushouts ============

def image_factorization(f: OgpMap) -> Factorization:
    """
    Factor f as a surjection onto its closed image followed by an inclusion

    Returns:
        (surjection, inclusion) with surjection;inclusion = f
    """
    image, embedding = restrict(f.target, f.image())
    position = {y: i for i, y in enumerate(embedding)}
    surjection = check_map(f.source, image, [position[y] for y in f.assignment])
    inclusion = OgpMap(image, f.target, embedding)
    return Factorization(surjection, inclusion)


def pushout_inclusions(i1: OgpMap, i2: OgpMap) -> Pushout:
    """
    Pushout of a span of inclusions P1 <- Q -> P2

    Elements are numbered as all of P1 followed by P2 minus Q; ids of P2 that
    collide with P1 get primes appended.

    Returns:
        Pushout(shape, j1, j2)

    Raises:
        PreconditionFailed: when the legs are not inclusions out of a common source
        OrientationConflict: when a glued cover receives two signs
    """
    if i1.source != i2.source:
        raise PreconditionFailed("span legs have different sources")
    if not (i1.is_injective() and i2.is_injective()):
        raise PreconditionFailed("span legs must be inclusions")
    Q, P1, P2 = i1.source, i1.target, i2.target
    i2_source = i2.source
    glued: Dict[int, int] = {}
    for q in range(len(Q)):
        q2 = q if i2_source is Q else i2_source.index_of(Q.id_of(q))
        glued[i2.assignment[q2]] = i1.assignment[q]

    names = list(P1.ids)
    taken = set(names)
    j2_names: Dict[int, str] = {}
    for p in range(len(P2)):
        if p in glued:
            j2_names[p] = P1.id_of(glued[p])
        else:
            name = fresh_name(P2.id_of(p), taken)
            taken.add(name)
            names.append(name)
            j2_names[p] = name

    covers: Dict[Tuple[str, str], str] = {}
    for u, l, s in P1.covers():
        covers[(P1.id_of(u), P1.id_of(l))] = s.value
    for u, l, s in P2.covers():
        key = (j2_names[u], j2_names[l])
        if key in covers and covers[key] != s.value:
            raise OrientationConflict(f"cover {key[0]} -> {key[1]} glued with both signs", locus=key)
        covers[key] = s.value

    shape = build_ogp(names, [(u, l, s) for (u, l), s in covers.items()])
    j1 = check_map(P1, shape, [shape.index_of(name) for name in P1.ids])
    j2 = check_map(P2, shape, [shape.index_of(j2_names[p]) for p in range(len(P2))])
    logger.debug("pushout of %r and %r over %r has %d elements", P1, P2, Q, len(shape))
    return Pushout(shape, j1, j2)


# ============ Surjections and cells ============

def _top(P: OrientedGradedPoset) -> Optional[int]:
    return greatest_element(P.whole())


def reverse_surjection(p: OgpMap) -> OgpMap:
    """
    The same surjection read out of the n-dual of its source, n = dim source

    Raises:
        PreconditionFailed: unless p is a surjection of atoms that drops dimension
    """
    from src.constructions.products import dual

    U, V = p.source, p.target
    if not p.is_surjective():
        raise PreconditionFailed("reverse_surjection needs a surjective map")
    if _top(U) is None or _top(V) is None:
        raise PreconditionFailed("reverse_surjection needs atoms")
    if U.dim <= V.dim:
        raise PreconditionFailed("reverse_surjection needs dim source > dim target", locus=(U.dim, V.dim))
    reversed_source = dual(U, {U.dim})
    try:
        return check_map(reversed_source, V, p.assignment)
    except NotAMap as e:
        raise InvariantViolation(f"reversed surjection is not a map: {e.message}", locus=e.locus) from e


def classify_cell(x: OgpMap) -> CellClassification:
    """
    Decide whether a cell x: U -> P of atom shape is degenerate

    Returns:
        CellClassification with kind 'degenerate' when the image has lower
        dimension than U, 'nondegenerate' otherwise
    """
    if _top(x.source) is None:
        raise PreconditionFailed("cells must have atom shape")
    surjection, inclusion = image_factorization(x)
    kind = 'degenerate' if surjection.target.dim < x.source.dim else 'nondegenerate'
    return CellClassification(kind, surjection, inclusion)


def find_reducing_factorization(x: OgpMap, candidates: Sequence[OrientedGradedPoset]) -> Optional[Factorization]:
    """
    Look for a non-invertible surjection U ->> V onto an equal-dimensional atom through which x factors

    The verdict is bounded by the candidate list: None means no candidate works.

    Args:
        x: Cell U -> P
        candidates: Atom shapes to try as V

    Returns:
        (surjection, remainder) with surjection;remainder = x, or None
    """
    U = x.source
    for V in candidates:
        if V.dim != U.dim or _top(V) is None or len(V) >= len(U):
            continue
        for p in enumerate_maps(U, V):
            if not p.is_surjective():
                continue
            remainder: Dict[int, int] = {}
            if any(remainder.setdefault(p(u), x(u)) != x(u) for u in range(len(U))):
                continue
            try:
                y = check_map(V, x.target, [remainder[v] for v in range(len(V))])
            except NotAMap:
                continue
            return Factorization(p, y)
    return None
