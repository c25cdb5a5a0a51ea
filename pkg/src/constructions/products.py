"""
Suspension, lax Gray product, join and duals, on shapes and on maps

Every product takes an optional naming hook so that callers can choose
element ids; the default ids are "(x⊗y)", "(x⋆y)", "(x⋆∅)", "(∅⋆y)" and "Σx".
Elements are emitted first-factor-major, then sorted by dimension.
"""

from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from src.maps import OgpMap, check_map
from src.ogposet import OrientedGradedPoset, Sign, build_ogp
from src.settings import get_logger

logger = get_logger(__name__)

Pair = Tuple[Optional[int], Optional[int]]
NameHook = Callable[[Optional[str], Optional[str]], str]
NameFactory = Callable[[OrientedGradedPoset, OrientedGradedPoset], NameHook]

POLES = ("⊥-", "⊥+")


# ============ Naming ============

def gray_name(x: str, y: str) -> str:
    return f"({x}⊗{y})"


def join_name(x: Optional[str], y: Optional[str]) -> str:
    if y is None:
        return f"({x}⋆∅)"
    if x is None:
        return f"(∅⋆{y})"
    return f"({x}⋆{y})"


def word_length(P: OrientedGradedPoset) -> int:
    return len(P.ids[0]) if len(P) else 0


def word_naming(P: OrientedGradedPoset, Q: OrientedGradedPoset) -> NameHook:
    """Concatenate ⊤/⊥ words, padding the missing side with ⊥"""
    left, right = word_length(P), word_length(Q)

    def name(x: Optional[str], y: Optional[str]) -> str:
        return (x if x is not None else '⊥' * left) + (y if y is not None else '⊥' * right)

    return name


def _default_join(P: OrientedGradedPoset, Q: OrientedGradedPoset) -> NameHook:
    return join_name


def _default_gray(P: OrientedGradedPoset, Q: OrientedGradedPoset) -> NameHook:
    return gray_name


# ============ Suspension ============

def _suspension(P: OrientedGradedPoset, name: Callable[[str], str]) -> Tuple[OrientedGradedPoset, List[str]]:
    names = [name(x) for x in P.ids]
    covers = []
    for x in range(len(P)):
        if P.dims[x] == 0:
            covers += [(names[x], POLES[0], Sign.MINUS), (names[x], POLES[1], Sign.PLUS)]
        for y, s in P.faces(x).items():
            covers.append((names[x], names[y], s))
    return build_ogp(list(POLES) + names, covers), names


def suspension(P: OrientedGradedPoset, name: Optional[Callable[[str], str]] = None) -> OrientedGradedPoset:
    """
    ΣP: two poles ⊥⁻, ⊥⁺ below a copy of P shifted up one dimension

    Args:
        P: Shape to suspend
        name: Id of Σx given the id of x; defaults to "Σx"
    """
    shape, _ = _suspension(P, name or (lambda x: f"Σ{x}"))
    return shape


def suspension_map(f: OgpMap, name: Optional[Callable[[str], str]] = None) -> OgpMap:
    """Σf, fixing both poles"""
    name = name or (lambda x: f"Σ{x}")
    source, _ = _suspension(f.source, name)
    target, _ = _suspension(f.target, name)
    assignment = {pole: pole for pole in POLES}
    assignment.update({name(x): name(y) for x, y in f.by_id().items()})
    return check_map(source, target, assignment)


# ============ Gray product ============

def gray_pairs(P: OrientedGradedPoset, Q: OrientedGradedPoset,
               name: Optional[NameHook] = None) -> Tuple[OrientedGradedPoset, Dict[Pair, int]]:
    """P ⊗ Q together with the index of each pair (x, y)"""
    name = name or gray_name
    names: Dict[Pair, str] = {}
    for x in range(len(P)):
        for y in range(len(Q)):
            names[(x, y)] = name(P.id_of(x), Q.id_of(y))
    covers = []
    for (x, y), label in names.items():
        for x2, s in P.faces(x).items():
            covers.append((label, names[(x2, y)], s))
        twist = Sign.parity(P.dims[x])
        for y2, s in Q.faces(y).items():
            covers.append((label, names[(x, y2)], twist * s))
    shape = build_ogp(list(names.values()), covers)
    logger.debug("gray product of %r and %r has %d elements", P, Q, len(shape))
    return shape, {pair: shape.index_of(label) for pair, label in names.items()}


def gray_product(P: OrientedGradedPoset, Q: OrientedGradedPoset, name: Optional[NameHook] = None) -> OrientedGradedPoset:
    """
    Lax Gray product P ⊗ Q

    The cover x⊗y -> x'⊗y keeps the sign of x -> x'; the cover x⊗y -> x⊗y'
    gets the sign of y -> y' twisted by (-)^dim x.
    """
    return gray_pairs(P, Q, name)[0]


def gray_map(f: OgpMap, g: OgpMap, name: Optional[NameHook] = None) -> OgpMap:
    """f ⊗ g, acting on pairs componentwise"""
    source, source_pairs = gray_pairs(f.source, g.source, name)
    target, target_pairs = gray_pairs(f.target, g.target, name)
    assignment = [0] * len(source)
    for (x, y), i in source_pairs.items():
        assignment[i] = target_pairs[(f(x), g(y))]
    return check_map(source, target, assignment)


# ============ Join ============

def join_pairs(P: OrientedGradedPoset, Q: OrientedGradedPoset,
               name: Optional[NameHook] = None) -> Tuple[OrientedGradedPoset, Dict[Pair, int]]:
    """P ⋆ Q together with the index of each pair; None stands for the adjoined bottom"""
    name = name or join_name
    names: Dict[Pair, str] = {}
    for x in range(len(P)):
        names[(x, None)] = name(P.id_of(x), None)
    for y in range(len(Q)):
        names[(None, y)] = name(None, Q.id_of(y))
    for x in range(len(P)):
        for y in range(len(Q)):
            names[(x, y)] = name(P.id_of(x), Q.id_of(y))

    covers = []
    for (x, y), label in names.items():
        if y is None:
            covers += [(label, names[(x2, None)], s) for x2, s in P.faces(x).items()]
        elif x is None:
            covers += [(label, names[(None, y2)], s) for y2, s in Q.faces(y).items()]
        else:
            twist = Sign.parity(P.dims[x] + 1)
            covers += [(label, names[(x2, y)], s) for x2, s in P.faces(x).items()]
            if not P.faces(x):
                covers.append((label, names[(None, y)], Sign.PLUS))
            covers += [(label, names[(x, y2)], twist * s) for y2, s in Q.faces(y).items()]
            if not Q.faces(y):
                covers.append((label, names[(x, None)], twist))
    shape = build_ogp(list(names.values()), covers)
    logger.debug("join of %r and %r has %d elements", P, Q, len(shape))
    return shape, {pair: shape.index_of(label) for pair, label in names.items()}


def join(P: OrientedGradedPoset, Q: OrientedGradedPoset, name: Optional[NameHook] = None) -> OrientedGradedPoset:
    """
    Join P ⋆ Q, the shape with (P ⋆ Q)⊥ ≅ P⊥ ⊗ Q⊥

    Elements are x, y and x⋆y of dimension dim x + dim y + 1.
    """
    return join_pairs(P, Q, name)[0]


def join_map(f: OgpMap, g: OgpMap, naming: Optional[NameFactory] = None) -> OgpMap:
    """
    f ⋆ g, acting as f⊥ and g⊥ on pairs

    Args:
        f: Map of first factors
        g: Map of second factors
        naming: Builds the name hook for a pair of factors; defaults to join_name
    """
    naming = naming or _default_join
    source, source_pairs = join_pairs(f.source, g.source, naming(f.source, g.source))
    target, target_pairs = join_pairs(f.target, g.target, naming(f.target, g.target))
    assignment = [0] * len(source)
    for (x, y), i in source_pairs.items():
        image = (None if x is None else f(x), None if y is None else g(y))
        assignment[i] = target_pairs[image]
    return check_map(source, target, assignment)


# ============ Duals ============

DualSpec = Union[str, Iterable[int]]


def dual_dims(J: DualSpec):
    """Predicate on dimensions for a J-dual: 'op' odd, 'co' even, 'all' or 'op_all' every positive dim"""
    if isinstance(J, str):
        if J == 'op':
            return lambda d: d % 2 == 1
        if J == 'co':
            return lambda d: d > 0 and d % 2 == 0
        if J in ('all', 'op_all'):
            return lambda d: d > 0
        raise ValueError(f"unknown dual {J!r}")
    dims = frozenset(int(d) for d in J)
    return lambda d: d in dims


def dual(P: OrientedGradedPoset, J: DualSpec) -> OrientedGradedPoset:
    """
    J-dual of P: flip the sign of every cover out of an element whose dimension is in J

    Element ids and enumeration are unchanged.
    """
    flip = dual_dims(J)
    faces = []
    for x in range(len(P)):
        if flip(P.dims[x]):
            faces.append({y: -s for y, s in P.faces(x).items()})
        else:
            faces.append(dict(P.faces(x)))
    return OrientedGradedPoset(P.ids, P.dims, faces)


def dual_map(f: OgpMap, J: DualSpec) -> OgpMap:
    return check_map(dual(f.source, J), dual(f.target, J), f.assignment)
