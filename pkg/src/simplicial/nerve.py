"""
Nerves of posets and the last vertex map

Only nondegenerate simplices are kept: a k-simplex is a strictly increasing
chain x₀ < … < x_k. Host indices are ordered by dimension, so every chain is
a sorted index tuple.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

import networkx as nx

from src.constructions import simplex
from src.errors import IndexOutOfRange, InvariantViolation
from src.ogposet import ClosedSubset, OrientedGradedPoset, hasse_graph
from src.settings import get_logger

logger = get_logger(__name__)

Chain = Tuple[int, ...]


@dataclass(frozen=True)
class OrderedComplex:
    """Chains of a host poset; chains[k] lists the k-simplices"""

    host: OrientedGradedPoset
    chains: Tuple[Tuple[Chain, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.chains) - 1

    def counts(self) -> List[int]:
        return [len(level) for level in self.chains]

    def index(self, k: int) -> Dict[Chain, int]:
        return {chain: i for i, chain in enumerate(self.chains[k])}

    def to_dict(self) -> Dict:
        return {'chains': [[[self.host.id_of(x) for x in chain] for chain in level] for level in self.chains]}


def order_graph(P: OrientedGradedPoset, members=None) -> nx.DiGraph:
    """Strict order on members as a DAG, edges from smaller to larger"""
    hasse = hasse_graph(P)
    if members is not None:
        hasse = hasse.subgraph(members)
    return nx.transitive_closure_dag(nx.DiGraph(hasse).reverse(copy=True))


def nerve(P: Union[OrientedGradedPoset, ClosedSubset]) -> OrderedComplex:
    """
    All strict chains of a poset or of a closed subset of one

    Args:
        P: Poset, or closed subset whose own order is used

    Returns:
        OrderedComplex over the host poset
    """
    if isinstance(P, ClosedSubset):
        host, members = P.host, P.members
    else:
        host, members = P, frozenset(range(len(P)))
    order = order_graph(host, members)

    levels: List[List[Chain]] = []
    current = [(x,) for x in sorted(members)]
    while current:
        levels.append(current)
        current = [chain + (y,) for chain in current for y in sorted(order.successors(chain[-1]))]
    for level in levels:
        level.sort()
    logger.debug("nerve has chain counts %s", [len(level) for level in levels])
    return OrderedComplex(host, tuple(tuple(level) for level in levels))


# ============ Last vertex map ============

@dataclass(frozen=True)
class LastVertexMap:
    """γₙ: Δⁿ -> [n], stored per element of the simplex"""

    n: int
    source: OrientedGradedPoset
    values: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.values[x]

    def by_id(self) -> Dict[str, int]:
        return {self.source.id_of(x): v for x, v in enumerate(self.values)}


def last_vertex(word: str) -> int:
    """n minus the number of trailing ⊥ in a simplex word of length n+1"""
    return len(word.rstrip("⊥")) - 1


def last_vertex_map(n: int) -> LastVertexMap:
    """
    The last vertex map γₙ: Δⁿ -> [n]

    Raises:
        IndexOutOfRange: for negative n
        InvariantViolation: when the map is not monotone
    """
    if n < 0:
        raise IndexOutOfRange("last_vertex_map needs n >= 0", locus=n)
    source = simplex(n)
    values = tuple(last_vertex(word) for word in source.ids)
    for upper, lower, _ in source.covers():
        if values[lower] > values[upper]:
            raise InvariantViolation("last vertex map is not monotone",
                                     locus=(source.id_of(lower), source.id_of(upper)))
    return LastVertexMap(n, source, values)


def chain_image(gamma: LastVertexMap, chain: Chain) -> Tuple[int, ...]:
    """
    Image of a chain of Δⁿ in the nerve of [n], as a weakly increasing vertex sequence

    Raises:
        InvariantViolation: when the image is not weakly increasing
    """
    image = tuple(gamma(x) for x in chain)
    if any(a > b for a, b in zip(image, image[1:])):
        raise InvariantViolation("chain image is not weakly increasing", locus=image)
    return image
