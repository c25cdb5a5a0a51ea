"""
Horns of atoms

A horn of an (n+1)-atom W is W minus its top and one n-dimensional element.
It is a composition horn when what is left is one boundary of W; the removed
element is then the top of the other boundary, which is an atom. A ternary
atom has three n-dimensional elements: one boundary is a single atom W₀ and
the other splits as W₊ followed by W₋. Removing the top of W₊ or W₋ gives a
division horn.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional

from src.errors import NotAnAtom
from src.molecule import precedence_graph
from src.ogposet import SIGNS, ClosedSubset, OrientedGradedPoset, Sign, boundary_members, greatest_element
from src.settings import get_logger

logger = get_logger(__name__)

HORN_KINDS = ('composition', 'division', 'other')


@dataclass(frozen=True)
class TernaryParts:
    """W₀, W₊, W₋ of a ternary atom, and the division horns Λ₋ = W₊ ∪ W₀, Λ₊ = W₋ ∪ W₀"""

    zero: ClosedSubset
    plus: ClosedSubset
    minus: ClosedSubset
    lambda_minus: ClosedSubset
    lambda_plus: ClosedSubset

    def to_dict(self) -> Dict:
        return {
            'zero': self.zero.ids,
            'plus': self.plus.ids,
            'minus': self.minus.ids,
            'lambda_minus': self.lambda_minus.ids,
            'lambda_plus': self.lambda_plus.ids,
        }


@dataclass(frozen=True)
class Horn:
    subset: ClosedSubset
    removed: int
    kind: str
    ternary_parts: Optional[TernaryParts] = None

    def to_dict(self) -> Dict:
        result = {
            'removed': self.subset.host.id_of(self.removed),
            'kind': self.kind,
            'subset': self.subset.ids,
        }
        if self.ternary_parts is not None:
            result['ternary'] = self.ternary_parts.to_dict()
        return result


def _ordered_pair(W: OrientedGradedPoset, first: int, second: int, n: int):
    """(W₊, W₋) tops: W₊ comes first at the highest level where the two atoms meet"""
    for k in range(n - 1, -1, -1):
        graph = precedence_graph(W, [first, second], k)
        if graph.has_edge(first, second):
            return first, second
        if graph.has_edge(second, first):
            return second, first
    return first, second


def ternary_parts(W: OrientedGradedPoset) -> Optional[TernaryParts]:
    """
    Split a ternary atom into W₀, W₊ and W₋

    Returns:
        TernaryParts, or None when W is not a ternary atom of dimension at least 2
    """
    top = greatest_element(W.whole())
    n = W.dim - 1
    if top is None or n < 1 or len(W.of_dim(n)) != 3:
        return None
    whole = frozenset(range(len(W)))
    for side in SIGNS:
        cells = [x for x in boundary_members(W, whole, n, side) if W.dims[x] == n]
        if len(cells) != 1:
            continue
        pair = [x for x in W.of_dim(n) if x not in cells]
        plus, minus = _ordered_pair(W, pair[0], pair[1], n)
        zero, w_plus, w_minus = W.down(cells[0]), W.down(plus), W.down(minus)
        return TernaryParts(
            zero=ClosedSubset(W, zero),
            plus=ClosedSubset(W, w_plus),
            minus=ClosedSubset(W, w_minus),
            lambda_minus=ClosedSubset(W, w_plus | zero),
            lambda_plus=ClosedSubset(W, w_minus | zero),
        )
    return None


def horns(W: OrientedGradedPoset) -> List[Horn]:
    """
    All horns of an atom, one per codimension-1 element

    Args:
        W: Atom of dimension n+1 >= 1

    Returns:
        Horns in element order, each classified as composition, division or other;
        every horn of a ternary atom carries its ternary parts

    Raises:
        NotAnAtom: when W has no greatest element or dimension below 1
    """
    top = greatest_element(W.whole())
    if top is None or W.dim < 1:
        raise NotAnAtom("horns need an atom of dimension at least 1", locus=W.dim)
    n = W.dim - 1
    whole = frozenset(range(len(W)))
    sides: Dict[Sign, frozenset] = {side: boundary_members(W, whole, n, side) for side in SIGNS}
    parts = ternary_parts(W)
    division = set()
    if parts is not None:
        division = {greatest_element(parts.plus), greatest_element(parts.minus)}

    result = []
    for y in W.of_dim(n):
        members = whole - {top, y}
        if any(members == boundary for boundary in sides.values()):
            kind = 'composition'
        elif y in division:
            kind = 'division'
        else:
            kind = 'other'
        result.append(Horn(ClosedSubset(W, members), y, kind, parts))
    logger.debug("%d horns of an atom with %d elements", len(result), len(W))
    return result
