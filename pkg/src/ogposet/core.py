"""
Oriented graded posets
======================

An oriented graded poset is a finite poset whose Hasse diagram carries a
sign (+ or -) on every covering edge. Elements are enumerated by
(dimension, construction order) and referred to by that index; every element
also has a string id which is what documents and constructions use.

Posets are immutable after construction. Boundaries of single elements are
memoized per poset.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx

from src.errors import (
    CyclicCovers,
    DimMismatch,
    DuplicateEdge,
    DuplicateElement,
    HostMismatch,
    NotGraded,
    TransitiveEdge,
    UnknownIndex,
)
from src.settings import get_logger

logger = get_logger(__name__)


class Sign(Enum):
    """Orientation label of a covering edge"""

    MINUS = '-'
    PLUS = '+'

    def __mul__(self, other: 'Sign') -> 'Sign':
        return Sign.PLUS if self is other else Sign.MINUS

    def __neg__(self) -> 'Sign':
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    @property
    def char(self) -> str:
        return self.value

    @classmethod
    def parse(cls, token: Union['Sign', str, int]) -> 'Sign':
        """
        Read a sign from '+', '-', 'plus', 'minus', +1 or -1

        Raises:
            ValueError: for any other token
        """
        if isinstance(token, Sign):
            return token
        if token in ('+', 'plus', 1):
            return cls.PLUS
        if token in ('-', 'minus', -1):
            return cls.MINUS
        raise ValueError(f"not a sign: {token!r}")

    @classmethod
    def parity(cls, k: int) -> 'Sign':
        """(-)^k"""
        return cls.PLUS if k % 2 == 0 else cls.MINUS


SIGNS = (Sign.MINUS, Sign.PLUS)

# None stands for "both sides" wherever a side is expected
Side = Optional[Sign]


class Element(NamedTuple):
    index: int
    id: str
    dim: int


class OrientedGradedPoset:
    """
    Finite oriented graded poset

    Use build_ogp to construct validated instances; the constructor itself
    trusts its input.

    Args:
        ids: Element ids, already in (dim, construction order)
        dims: Dimension of each element
        faces: For each element, a mapping from covered element to sign
    """

    def __init__(self, ids: Sequence[str], dims: Sequence[int], faces: Sequence[Dict[int, Sign]]):
        self._ids = tuple(ids)
        self._dims = tuple(dims)
        self._faces = tuple(dict(f) for f in faces)
        cofaces: List[Dict[int, Sign]] = [dict() for _ in self._ids]
        for upper, lows in enumerate(self._faces):
            for lower, sign in lows.items():
                cofaces[lower][upper] = sign
        self._cofaces = tuple(cofaces)
        self._index = {name: i for i, name in enumerate(self._ids)}
        self._down: Optional[Tuple[FrozenSet[int], ...]] = None
        self._up: Optional[Tuple[FrozenSet[int], ...]] = None
        self._key = None
        self._cache: Dict = {}

    # ============ Basic access ============

    def __len__(self) -> int:
        return len(self._ids)

    @property
    def size(self) -> int:
        return len(self._ids)

    @property
    def ids(self) -> Tuple[str, ...]:
        return self._ids

    @property
    def dims(self) -> Tuple[int, ...]:
        return self._dims

    @property
    def dim(self) -> int:
        return max(self._dims) if self._dims else -1

    def elements(self) -> Iterator[Element]:
        for i, name in enumerate(self._ids):
            yield Element(i, name, self._dims[i])

    def id_of(self, x: int) -> str:
        return self._ids[x]

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownIndex(f"no element with id {name!r}", locus=name) from None

    def has_id(self, name: str) -> bool:
        return name in self._index

    def faces(self, x: int) -> Dict[int, Sign]:
        return self._faces[x]

    def cofaces(self, x: int) -> Dict[int, Sign]:
        return self._cofaces[x]

    def sign(self, upper: int, lower: int) -> Optional[Sign]:
        return self._faces[upper].get(lower)

    def covers(self) -> List[Tuple[int, int, Sign]]:
        return [(u, l, s) for u in range(len(self)) for l, s in sorted(self._faces[u].items())]

    def of_dim(self, n: int) -> List[int]:
        return [i for i, d in enumerate(self._dims) if d == n]

    def whole(self) -> 'ClosedSubset':
        return ClosedSubset(self, frozenset(range(len(self))))

    # ============ Order ============

    def down(self, x: int) -> FrozenSet[int]:
        """Closure of {x}"""
        if self._down is None:
            down: List[FrozenSet[int]] = []
            for i in range(len(self)):
                acc = {i}
                for j in self._faces[i]:
                    acc |= down[j]
                down.append(frozenset(acc))
            self._down = tuple(down)
        return self._down[x]

    def up(self, x: int) -> FrozenSet[int]:
        """Elements y with x <= y"""
        if self._up is None:
            up: List[FrozenSet[int]] = [frozenset()] * len(self)
            for i in reversed(range(len(self))):
                acc = {i}
                for j in self._cofaces[i]:
                    acc |= up[j]
                up[i] = frozenset(acc)
            self._up = tuple(up)
        return self._up[x]

    def leq(self, x: int, y: int) -> bool:
        return x in self.down(y)

    # ============ Equality ============

    def structure_key(self):
        if self._key is None:
            elements = frozenset(zip(self._ids, self._dims))
            edges = frozenset(
                (self._ids[u], self._ids[l], s.value) for u, l, s in self.covers()
            )
            self._key = (elements, edges)
        return self._key

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, OrientedGradedPoset):
            return NotImplemented
        return len(self) == len(other) and self.structure_key() == other.structure_key()

    def __hash__(self) -> int:
        return hash(self.structure_key())

    def __repr__(self) -> str:
        return f"OrientedGradedPoset(size={len(self)}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class ClosedSubset:
    """Downward-closed set of elements of a fixed poset"""

    host: OrientedGradedPoset
    members: FrozenSet[int]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosedSubset):
            return NotImplemented
        return self.members == other.members and (self.host is other.host or self.host == other.host)

    def __hash__(self) -> int:
        return hash(self.members)

    @property
    def dim(self) -> int:
        return subset_dim(self.host, self.members)

    @property
    def ids(self) -> List[str]:
        return [self.host.id_of(x) for x in sorted(self.members)]

    def __repr__(self) -> str:
        return f"ClosedSubset({self.ids})"


class SubsetProfile(NamedTuple):
    dim: int
    pure: bool
    maximal_elements: FrozenSet[int]


class ThinnessReport(NamedTuple):
    """Verdict of is_oriented_thin; interval is (lower id or None for the bottom, upper id)"""

    ok: bool
    interval: Optional[Tuple[Optional[str], str]] = None

    def __bool__(self) -> bool:
        return self.ok


# ============ Construction ============

RawElement = Union[str, Tuple[str, Optional[int]], Dict]
RawCover = Tuple[Union[int, str], Union[int, str], Union[Sign, str, int]]


def _normalize_elements(elements: Sequence[RawElement]) -> Tuple[List[str], List[Optional[int]]]:
    names: List[str] = []
    declared: List[Optional[int]] = []
    seen = set()
    for raw in elements:
        if isinstance(raw, dict):
            name, dim = raw['id'], raw.get('dim')
        elif isinstance(raw, (tuple, list)):
            name, dim = raw[0], raw[1] if len(raw) > 1 else None
        else:
            name, dim = raw, None
        name = str(name)
        if name in seen:
            raise DuplicateElement(f"element id {name!r} declared twice", locus=name)
        seen.add(name)
        names.append(name)
        declared.append(dim)
    return names, declared


def _resolve(ref: Union[int, str], names: List[str], positions: Dict[str, int]) -> int:
    if isinstance(ref, bool):
        raise UnknownIndex(f"bad element reference {ref!r}", locus=str(ref))
    if isinstance(ref, int):
        if 0 <= ref < len(names):
            return ref
        raise UnknownIndex(f"element index {ref} out of range", locus=ref)
    if ref in positions:
        return positions[ref]
    raise UnknownIndex(f"no element with id {ref!r}", locus=str(ref))


def build_ogp(elements: Sequence[RawElement], covers: Iterable[RawCover]) -> OrientedGradedPoset:
    """
    Build and validate an oriented graded poset from raw data

    Args:
        elements: Ids, (id, dim) pairs or {'id', 'dim'} dicts; declared dims are optional
        covers: (upper, lower, sign) triples; endpoints are positions in
                ``elements`` or element ids

    Returns:
        Validated poset with elements reordered by (dim, declaration order)

    Raises:
        UnknownIndex, DuplicateElement, DuplicateEdge, CyclicCovers,
        TransitiveEdge, NotGraded, DimMismatch
    """
    names, declared = _normalize_elements(elements)
    positions = {name: i for i, name in enumerate(names)}

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(names)))
    faces: List[Dict[int, Sign]] = [dict() for _ in names]
    order: List[Tuple[int, int]] = []
    for upper, lower, sign in covers:
        u = _resolve(upper, names, positions)
        l = _resolve(lower, names, positions)
        if l in faces[u]:
            raise DuplicateEdge(f"cover {names[u]} -> {names[l]} declared twice", locus=(names[u], names[l]))
        try:
            faces[u][l] = Sign.parse(sign)
        except ValueError:
            raise UnknownIndex(f"bad sign {sign!r} on cover {names[u]} -> {names[l]}", locus=(names[u], names[l]))
        graph.add_edge(u, l)
        order.append((u, l))

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise CyclicCovers("covering relation has a cycle", locus=[names[u] for u, _ in cycle])

    reduced = nx.transitive_reduction(graph)
    for u, l in order:
        if not reduced.has_edge(u, l):
            raise TransitiveEdge(
                f"cover {names[u]} -> {names[l]} is implied by shorter covers", locus=(names[u], names[l])
            )

    dims: List[int] = [0] * len(names)
    for x in reversed(list(nx.topological_sort(graph))):
        below = {dims[l] for l in faces[x]}
        if len(below) > 1:
            raise NotGraded(f"element {names[x]} covers elements of different dimensions", locus=names[x])
        dims[x] = below.pop() + 1 if below else 0

    for x, dim in enumerate(declared):
        if dim is not None and int(dim) != dims[x]:
            raise DimMismatch(
                f"element {names[x]} declared with dim {dim}, grading gives {dims[x]}", locus=names[x]
            )

    permutation = sorted(range(len(names)), key=lambda i: (dims[i], i))
    new_index = {old: new for new, old in enumerate(permutation)}
    poset = OrientedGradedPoset(
        [names[i] for i in permutation],
        [dims[i] for i in permutation],
        [{new_index[l]: s for l, s in faces[i].items()} for i in permutation],
    )
    logger.debug("built %r", poset)
    return poset


def hasse_graph(P: OrientedGradedPoset) -> nx.DiGraph:
    """
    Signed Hasse diagram of P, edges pointing from upper to lower element

    Nodes are indices carrying 'id' and 'dim'; edges carry 'sign' as '+' or '-'.
    """
    graph = P._cache.get('hasse')
    if graph is None:
        graph = nx.DiGraph()
        for x in range(len(P)):
            graph.add_node(x, id=P.id_of(x), dim=P.dims[x])
        for upper, lower, sign in P.covers():
            graph.add_edge(upper, lower, sign=sign.value)
        P._cache['hasse'] = graph
    return graph


def fresh_name(base: str, taken) -> str:
    """Append primes to base until it is not in taken"""
    name = base
    while name in taken:
        name += "'"
    return name


def rename(P: OrientedGradedPoset, mapping: Union[Dict[str, str], Callable[[str], str]]) -> OrientedGradedPoset:
    """Relabel element ids without touching the structure"""
    if callable(mapping):
        new_ids = [mapping(name) for name in P.ids]
    else:
        new_ids = [mapping.get(name, name) for name in P.ids]
    if len(set(new_ids)) != len(new_ids):
        raise DuplicateElement("renaming is not injective")
    return OrientedGradedPoset(new_ids, P.dims, [P.faces(x) for x in range(len(P))])


def with_flipped_sign(P: OrientedGradedPoset, upper: int, lower: int) -> OrientedGradedPoset:
    """Copy of P with the sign of one cover negated"""
    if P.sign(upper, lower) is None:
        raise UnknownIndex(f"{P.id_of(upper)} does not cover {P.id_of(lower)}", locus=(P.id_of(upper), P.id_of(lower)))
    faces = [dict(P.faces(x)) for x in range(len(P))]
    faces[upper][lower] = -faces[upper][lower]
    return OrientedGradedPoset(P.ids, P.dims, faces)


# ============ Subsets ============

def _check_indices(P: OrientedGradedPoset, S: Iterable[int]) -> FrozenSet[int]:
    members = frozenset(S)
    for x in members:
        if not isinstance(x, int) or not 0 <= x < len(P):
            raise UnknownIndex(f"element index {x!r} out of range", locus=x)
    return members


def closure_members(P: OrientedGradedPoset, S: Iterable[int]) -> FrozenSet[int]:
    acc = set()
    for x in S:
        if x not in acc:
            acc |= P.down(x)
    return frozenset(acc)


def closure(P: OrientedGradedPoset, S: Iterable[int]) -> ClosedSubset:
    """
    Smallest downward-closed superset of S

    Raises:
        UnknownIndex: when S mentions an element outside P
    """
    return ClosedSubset(P, closure_members(P, _check_indices(P, S)))


def subset_dim(P: OrientedGradedPoset, members: Iterable[int]) -> int:
    return max((P.dims[x] for x in members), default=-1)


def maximal_members(P: OrientedGradedPoset, members: FrozenSet[int]) -> FrozenSet[int]:
    return frozenset(x for x in members if not any(y in members for y in P.cofaces(x)))


def maximal_elements(U: ClosedSubset) -> FrozenSet[int]:
    return maximal_members(U.host, U.members)


def greatest_element(U: ClosedSubset) -> Optional[int]:
    maximal = maximal_elements(U)
    if len(maximal) == 1:
        return next(iter(maximal))
    return None


def subset_profile(P: OrientedGradedPoset, U: ClosedSubset) -> SubsetProfile:
    """
    Dimension, purity and maximal elements of a closed subset

    Returns:
        SubsetProfile with dim -1 for the empty set
    """
    _same_host(P, U)
    maximal = maximal_elements(U)
    dim = subset_dim(P, U.members)
    return SubsetProfile(dim, all(P.dims[x] == dim for x in maximal), maximal)


def _same_host(P: OrientedGradedPoset, U: ClosedSubset) -> None:
    if U.host is not P and U.host != P:
        raise HostMismatch("closed subset belongs to a different poset")


# ============ Boundaries ============

def granular_members(P: OrientedGradedPoset, members: FrozenSet[int], n: int, side: Sign) -> FrozenSet[int]:
    """Elements of dimension n all of whose covers inside members carry the given sign"""
    return frozenset(
        x for x in members
        if P.dims[x] == n and all(s is side for y, s in P.cofaces(x).items() if y in members)
    )


def boundary_members(P: OrientedGradedPoset, members: FrozenSet[int], n: int, side: Side) -> FrozenSet[int]:
    if side is None:
        return boundary_members(P, members, n, Sign.MINUS) | boundary_members(P, members, n, Sign.PLUS)
    if n < 0:
        return frozenset()
    if n >= subset_dim(P, members):
        return members
    delta = granular_members(P, members, n, side)
    high = closure_members(P, (x for x in members if P.dims[x] > n))
    return closure_members(P, delta | (members - high))


def boundary(P: OrientedGradedPoset, U: ClosedSubset, n: int, side: Side = None,
             granular: bool = False) -> Union[ClosedSubset, FrozenSet[int]]:
    """
    Input or output n-boundary of a closed subset

    Args:
        P: Host poset
        U: Closed subset of P
        n: Boundary dimension
        side: Sign.MINUS (input), Sign.PLUS (output) or None for both
        granular: Return the raw set of n-dimensional elements instead of its closure

    Returns:
        ClosedSubset, or a frozenset of indices when granular
    """
    _same_host(P, U)
    if granular:
        if side is None:
            return granular_members(P, U.members, n, Sign.MINUS) | granular_members(P, U.members, n, Sign.PLUS)
        return granular_members(P, U.members, n, side)
    return ClosedSubset(P, boundary_members(P, U.members, n, side))


def element_boundary(P: OrientedGradedPoset, x: int, n: int, side: Side) -> FrozenSet[int]:
    """n-boundary of clos{x}, memoized per poset"""
    key = ('element_boundary', x, n, side)
    cached = P._cache.get(key)
    if cached is None:
        cached = boundary_members(P, P.down(x), n, side)
        P._cache[key] = cached
    return cached


# ============ Thinness, skeleta, restriction ============

def is_oriented_thin(P: OrientedGradedPoset) -> ThinnessReport:
    """
    Check that every length-2 interval of P with a bottom adjoined is an oriented diamond

    Returns:
        ThinnessReport; on failure, the offending interval (None stands for the bottom)
    """
    for y in range(len(P)):
        dim = P.dims[y]
        if dim == 1:
            signs = list(P.faces(y).values())
            if len(signs) != 2 or signs[0] is signs[1]:
                return ThinnessReport(False, (None, P.id_of(y)))
        elif dim >= 2:
            for x in sorted(P.down(y)):
                if P.dims[x] != dim - 2:
                    continue
                middle = [m for m in sorted(P.faces(y)) if x in P.faces(m)]
                if len(middle) != 2:
                    return ThinnessReport(False, (P.id_of(x), P.id_of(y)))
                first = P.sign(y, middle[0]) * P.sign(middle[0], x)
                second = P.sign(y, middle[1]) * P.sign(middle[1], x)
                if first is second:
                    return ThinnessReport(False, (P.id_of(x), P.id_of(y)))
    return ThinnessReport(True)


def restrict(P: OrientedGradedPoset, U: Union[ClosedSubset, Iterable[int]]) -> Tuple[OrientedGradedPoset, Tuple[int, ...]]:
    """
    The closed subset U as a poset of its own

    Returns:
        (poset, embedding) where embedding[i] is the host index of element i
    """
    members = U.members if isinstance(U, ClosedSubset) else frozenset(U)
    embedding = tuple(sorted(members))
    position = {x: i for i, x in enumerate(embedding)}
    faces = []
    for x in embedding:
        try:
            faces.append({position[l]: s for l, s in P.faces(x).items()})
        except KeyError:
            raise UnknownIndex(f"subset is not closed below {P.id_of(x)}", locus=P.id_of(x)) from None
    return OrientedGradedPoset([P.id_of(x) for x in embedding], [P.dims[x] for x in embedding], faces), embedding


def skeleton(P: OrientedGradedPoset, n: int) -> Tuple[OrientedGradedPoset, Tuple[int, ...]]:
    """
    Restriction of P to elements of dimension at most n

    Returns:
        (poset, embedding) as in restrict
    """
    return restrict(P, [x for x in range(len(P)) if P.dims[x] <= n])
