"""
Pasting of molecules along matching boundaries
"""

from typing import Tuple

from src.errors import BoundaryMismatch, InvariantViolation
from src.maps import OgpMap, Pushout, find_unique_iso, pushout_inclusions
from src.ogposet import OrientedGradedPoset, Sign, boundary_members, restrict
from src.settings import get_logger

logger = get_logger(__name__)


def boundary_poset(U: OrientedGradedPoset, k: int, side) -> Tuple[OrientedGradedPoset, OgpMap]:
    """∂ₖ^α U as a poset of its own, with its inclusion into U"""
    shape, embedding = restrict(U, boundary_members(U, frozenset(range(len(U))), k, side))
    return shape, OgpMap(shape, U, embedding)


def paste(U: OrientedGradedPoset, V: OrientedGradedPoset, k: int) -> Pushout:
    """
    U #ₖ V, glued along the unique isomorphism ∂ₖ⁺U ≅ ∂ₖ⁻V

    Args:
        U: First molecule
        V: Second molecule
        k: Pasting dimension

    Returns:
        Pushout(shape, j1, j2) with the inclusions of U and V

    Raises:
        BoundaryMismatch: when ∂ₖ⁺U and ∂ₖ⁻V are not isomorphic
    """
    output_shape, output_inclusion = boundary_poset(U, k, Sign.PLUS)
    input_shape, input_inclusion = boundary_poset(V, k, Sign.MINUS)
    iso = find_unique_iso(output_shape, input_shape)
    if iso is None:
        raise BoundaryMismatch(f"output {k}-boundary of the first shape does not match the input of the second", locus=k)
    result = pushout_inclusions(output_inclusion, iso.then(input_inclusion))

    # ∂ₙ₋₁^α(U #ₖ V) = ∂ₙ₋₁^α U #ₖ ∂ₙ₋₁^α V below the top pasting dimension
    n = max(U.dim, V.dim)
    if k < n - 1:
        whole = frozenset(range(len(result.shape)))
        for alpha in (Sign.MINUS, Sign.PLUS):
            expected = (result.j1.image(boundary_members(U, frozenset(range(len(U))), n - 1, alpha))
                        | result.j2.image(boundary_members(V, frozenset(range(len(V))), n - 1, alpha)))
            if boundary_members(result.shape, whole, n - 1, alpha) != expected:
                raise InvariantViolation(f"boundary {n - 1}{alpha.char} of a pasting is not the pasting of boundaries")
    logger.debug("pasted %r #%d %r into %r", U, k, V, result.shape)
    return result
