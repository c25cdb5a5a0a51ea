"""
Integer chain complexes of nerves, homology and Euler characteristics
"""

from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

import numpy as np

from src.errors import InvariantViolation
from src.ogposet import ClosedSubset, OrientedGradedPoset
from src.settings import get_logger
from .nerve import OrderedComplex, nerve
from .smith import smith_normal_form

logger = get_logger(__name__)


def boundary_matrices(C: OrderedComplex, reduced: bool = False) -> List[np.ndarray]:
    """
    Simplicial boundary operators of a complex

    Args:
        C: Ordered complex
        reduced: Prepend the augmentation C₀ -> ℤ as the degree-0 operator

    Returns:
        matrices[k] is ∂ₖ: Cₖ -> Cₖ₋₁ with rows indexed by chains[k-1] and columns by chains[k];
        matrices[0] is the augmentation (1 x |C₀|) when reduced, an empty 0 x |C₀| matrix otherwise

    Raises:
        InvariantViolation: when some ∂ₖ₋₁∂ₖ is nonzero
    """
    counts = C.counts()
    matrices: List[np.ndarray] = []
    if counts:
        first = np.zeros((1 if reduced else 0, counts[0]), dtype=object)
        if reduced:
            first[0, :] = 1
        matrices.append(first)
    for k in range(1, len(counts)):
        rows = C.index(k - 1)
        D = np.zeros((counts[k - 1], counts[k]), dtype=object)
        for j, chain in enumerate(C.chains[k]):
            for i in range(len(chain)):
                D[rows[chain[:i] + chain[i + 1:]], j] += (-1) ** i
        matrices.append(D)

    for k in range(1, len(matrices)):
        if matrices[k - 1].shape[0] and np.any(matrices[k - 1].dot(matrices[k]) != 0):
            raise InvariantViolation(f"boundary operators compose to a nonzero map in degree {k}", locus=k)
    return matrices


@dataclass
class HomologySummary:
    """Per degree, a Betti number and the torsion coefficients above 1"""

    reduced: bool
    betti: Dict[int, int] = field(default_factory=dict)
    torsion: Dict[int, List[int]] = field(default_factory=dict)

    def degrees(self) -> List[int]:
        return sorted(self.betti)

    def is_trivial(self) -> bool:
        return all(b == 0 for b in self.betti.values()) and not any(self.torsion.values())

    def nonzero(self) -> Dict[int, Tuple[int, List[int]]]:
        return {k: (self.betti[k], self.torsion.get(k, []))
                for k in self.degrees() if self.betti[k] or self.torsion.get(k)}

    def group(self, k: int) -> str:
        parts = []
        b = self.betti.get(k, 0)
        if b == 1:
            parts.append("Z")
        elif b > 1:
            parts.append(f"Z^{b}")
        parts += [f"Z/{t}" for t in self.torsion.get(k, [])]
        return " ⊕ ".join(parts) if parts else "0"

    def lines(self) -> List[str]:
        return [f"H_{k} = {self.group(k)}" for k in self.degrees()]

    def to_dict(self) -> Dict:
        return {
            'reduced': self.reduced,
            'groups': [{'degree': k, 'betti': self.betti[k], 'torsion': self.torsion.get(k, [])}
                       for k in self.degrees()],
        }

    def __str__(self) -> str:
        return "\n".join(self.lines())


def homology(C: OrderedComplex, reduced: bool = False) -> HomologySummary:
    """
    Integer homology of an ordered complex

    Betti numbers are dim Cₖ - rank ∂ₖ - rank ∂ₖ₊₁; torsion is read off the
    invariant factors of ∂ₖ₊₁. Reduced homology augments the complex by ℤ in
    degree -1.
    """
    matrices = boundary_matrices(C, reduced)
    forms = [smith_normal_form(D) if D.size else None for D in matrices]

    def rank(k: int) -> int:
        if k >= len(forms) or forms[k] is None:
            return 0
        return forms[k].rank

    def factors(k: int) -> List[int]:
        if k >= len(forms) or forms[k] is None:
            return []
        return [t for t in forms[k].factors if t > 1]

    summary = HomologySummary(reduced)
    counts = C.counts()
    if reduced:
        summary.betti[-1] = 1 - rank(0)
        summary.torsion[-1] = factors(0)
    for k, size in enumerate(counts):
        summary.betti[k] = size - rank(k) - rank(k + 1)
        summary.torsion[k] = factors(k + 1)
    logger.debug("homology of a complex with chain counts %s: %s", counts, summary.lines())
    return summary


# ============ Euler characteristic ============

class EulerCharacteristic(NamedTuple):
    by_elements: int
    by_chains: int


def euler(P: Union[OrientedGradedPoset, ClosedSubset], C: Optional[OrderedComplex] = None) -> EulerCharacteristic:
    """
    Σ (-1)^dim x over elements, and Σ (-1)^k #k-chains over the nerve

    Raises:
        InvariantViolation: when the two counts differ
    """
    if isinstance(P, ClosedSubset):
        host, members = P.host, P.members
    else:
        host, members = P, range(len(P))
    by_elements = sum((-1) ** host.dims[x] for x in members)
    if C is None:
        C = nerve(P)
    by_chains = sum((-1) ** k * count for k, count in enumerate(C.counts()))
    if by_elements != by_chains:
        raise InvariantViolation(f"Euler characteristic by elements {by_elements} differs from chains {by_chains}")
    return EulerCharacteristic(by_elements, by_chains)
