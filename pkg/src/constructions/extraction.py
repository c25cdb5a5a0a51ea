"""
The molecules Eᵏₙ and Ẽᵏₙ that extract an (n+k)-globe from an iterated cylinder on Δⁿ

E⁰ₙ glues O(Δⁿ⁻¹) to Δⁿ along d⁰ and the input copy. Eᵏ⁺¹ₙ pastes the cell
Oᵏ(Δⁿ) ⇒ Eᵏₙ, then O(O^{k+1}(Δⁿ⁻¹)) along the core, then Eᵏₙ ⇒ Oᵏ(Δⁿ) along the
whole output boundary of the first two.
Each Eᵏₙ retracts onto its core O^{k+1}(Δⁿ⁻¹). Ẽᵏₙ substitutes Ẽᵏ⁺¹ₙ₋₁ for
the core, and retracts onto O^{k+n}.
"""

from typing import Dict, List

from src.errors import IndexOutOfRange, InvariantViolation
from src.maps import OgpMap, check_map, find_unique_iso, identity, pushout_inclusions
from src.ogposet import ClosedSubset, OrientedGradedPoset, greatest_element
from src.settings import get_logger
from .bundle import ShapeBundle
from .cells import boundary_match, cell_extension, substitution
from .cylinders import cylinder, cylinder_map, fattening
from .generators import globe, simplex
from .simplices import a_map, codegeneracy, coface

logger = get_logger(__name__)


def iterated_cylinder(P: OrientedGradedPoset, k: int) -> OrientedGradedPoset:
    """Oᵏ(P)"""
    for _ in range(k):
        P = cylinder(P).shape
    return P


def iterated_fattening(k: int, n: int) -> OgpMap:
    """Oᵏ(s⁰≺): Oᵏ(Δⁿ) ->> O^{k+1}(Δⁿ⁻¹)"""
    f = fattening(codegeneracy(0, n - 1))
    for _ in range(k):
        f = cylinder_map(f)
    return f


class _RetractionBuilder:
    """Collects a map into a fixed target piece by piece, refusing conflicting values"""

    def __init__(self, source: OrientedGradedPoset, target: OrientedGradedPoset):
        self.source = source
        self.target = target
        self.values: Dict[int, int] = {}

    def put(self, element: int, image: int) -> None:
        if self.values.setdefault(element, image) != image:
            raise InvariantViolation("retraction is not well defined", locus=self.source.id_of(element))

    def put_map(self, embed: OgpMap, value: OgpMap) -> None:
        """Send embed(x) to value(x); the two maps may start from separately built copies of one shape"""
        same = embed.source is value.source
        for x in range(len(embed.source)):
            self.put(embed(x), value(x if same else value.source.index_of(embed.source.id_of(x))))

    def build(self) -> OgpMap:
        missing = [self.source.id_of(x) for x in range(len(self.source)) if x not in self.values]
        if missing:
            raise InvariantViolation("retraction is not total", locus=missing)
        return check_map(self.source, self.target, [self.values[x] for x in range(len(self.source))])


def _check_range(k: int, n: int) -> None:
    if k < 0 or n < 2:
        raise IndexOutOfRange(f"extraction needs k >= 0 and n >= 2, got k={k}, n={n}", locus=(k, n))


def _base(n: int) -> ShapeBundle:
    core = cylinder(simplex(n - 1))
    glued = pushout_inclusions(coface(0, n), core['iota_minus'])
    builder = _RetractionBuilder(glued.shape, core.shape)
    builder.put_map(glued.j1, codegeneracy(0, n - 1).then(core['iota_minus']))
    builder.put_map(glued.j2, _identity_values(core.shape))
    return ShapeBundle(glued.shape, {'retraction': builder.build(), 'core': glued.j2})


def _identity_values(P: OrientedGradedPoset) -> OgpMap:
    return OgpMap(P, P, tuple(range(len(P))))


def _step(previous: ShapeBundle, k: int, n: int) -> ShapeBundle:
    """Eᵏ⁺¹ₙ from Eᵏₙ"""
    E, core, r = previous.shape, previous['core'], previous['retraction']
    cells = iterated_cylinder(simplex(n), k)
    squash = iterated_fattening(k, n)
    middle = cylinder(core.source)
    entering = cell_extension(cells, E)
    leaving = cell_extension(E, cells)
    top_core = greatest_element(core.source.whole())

    first = pushout_inclusions(core.then(entering['output']), middle['iota_minus'])
    # ∂⁺ of the first two cells: Eᵏₙ with its core swapped for the output side of the middle cylinder
    swapped = [first.j1(entering['output'](x)) for x in range(len(E))]
    swapped[core(top_core)] = first.j2(middle['iota_plus'](top_core))
    second = pushout_inclusions(check_map(E, first.shape, swapped), leaving['input'])
    shape = second.shape
    into_first = first.j1.then(second.j1)
    into_middle = first.j2.then(second.j1)
    into_leaving = second.j2

    builder = _RetractionBuilder(shape, middle.shape)
    builder.put_map(entering['output'].then(into_first), r.then(middle['iota_minus']))
    builder.put_map(entering['input'].then(into_first), squash.then(middle['iota_minus']))
    builder.put_map(leaving['input'].then(into_leaving), r.then(middle['iota_plus']))
    builder.put_map(leaving['output'].then(into_leaving), squash.then(middle['iota_plus']))
    builder.put_map(into_middle, _identity_values(middle.shape))
    builder.put(into_first(greatest_element(entering.shape.whole())), middle['iota_minus'](top_core))
    builder.put(into_leaving(greatest_element(leaving.shape.whole())), middle['iota_plus'](top_core))
    logger.debug("E^%d_%d has %d elements", k + 1, n, len(shape))
    return ShapeBundle(shape, {'retraction': builder.build(), 'core': into_middle})


def _plain(k: int, n: int) -> ShapeBundle:
    bundle = _base(n)
    for i in range(k):
        bundle = _step(bundle, i, n)
    _, match = boundary_match(bundle.shape, iterated_cylinder(simplex(n), k))
    bundle.maps['boundary'] = match
    return bundle


def _tilde(k: int, n: int) -> ShapeBundle:
    plain = _plain(k, n)
    if n == 2:
        flat = find_unique_iso(plain['core'].source, globe(k + 2))
        if flat is None:
            raise InvariantViolation(f"O^{k + 1}(Δ¹) is not the {k + 2}-globe", locus=k)
        unflat = OgpMap(flat.target, flat.source, tuple(sorted(range(len(flat.source)), key=flat)))
        return ShapeBundle(plain.shape, {
            'retraction': plain['retraction'].then(flat),
            'core': unflat.then(plain['core']),
            'boundary': plain['boundary'],
        })

    inner = _tilde(k + 1, n - 1)
    E, core = plain.shape, plain['core']
    replaced = substitution(E, ClosedSubset(E, core.image()), inner.shape, assume_submolecule=True)
    shape, inclusion = replaced.shape, replaced['inclusion']

    # outside the replaced interior, r lands on the boundary of the core, which the substitution kept by id
    back = {inclusion(w): w for w in range(len(inner.shape))}
    r = plain['retraction']
    values: List[int] = []
    for x in range(len(shape)):
        if x in back:
            values.append(back[x])
        else:
            landed = shape.index_of(E.id_of(core(r(E.index_of(shape.id_of(x))))))
            if landed not in back:
                raise InvariantViolation("retraction hits the interior of the core", locus=shape.id_of(x))
            values.append(back[landed])
    step = check_map(shape, inner.shape, values)
    _, match = boundary_match(shape, iterated_cylinder(simplex(n), k))
    logger.debug("Ẽ^%d_%d has %d elements", k, n, len(shape))
    return ShapeBundle(shape, {
        'retraction': step.then(inner['retraction']),
        'core': inner['core'].then(inclusion),
        'boundary': match,
    })


def extr(k: int, n: int, tilde: bool = False) -> ShapeBundle:
    """
    Eᵏₙ, or Ẽᵏₙ when tilde is set

    Args:
        k: Number of cylinder levels, at least 0
        n: Simplex dimension, at least 2
        tilde: Substitute the nested Ẽ molecules for the core

    Returns:
        ShapeBundle with
            'retraction': Eᵏₙ ->> O^{k+1}(Δⁿ⁻¹), or Ẽᵏₙ ->> O^{k+n},
            'core': the inclusion of the retraction's target,
            'boundary': ∂Eᵏₙ ≅ ∂Oᵏ(Δⁿ) followed by ∂Oᵏ(Δⁿ) ↪ Oᵏ(Δⁿ)

    Raises:
        IndexOutOfRange: for k < 0 or n < 2
    """
    _check_range(k, n)
    return _tilde(k, n) if tilde else _plain(k, n)


def check_retraction_diagram(k: int, n: int) -> Dict[str, bool]:
    """On ∂Eᵏₙ the retraction agrees with Oᵏ(s⁰≺) read through ∂Eᵏₙ ≅ ∂Oᵏ(Δⁿ)"""
    _check_range(k, n)
    bundle = _plain(k, n)
    rim, match = boundary_match(bundle.shape, iterated_cylinder(simplex(n), k))
    return {
        'core;retraction = id': bundle['core'].then(bundle['retraction']) == identity(bundle['core'].source),
        'boundary;retraction = boundary;squash': rim.then(bundle['retraction']) == match.then(iterated_fattening(k, n)),
    }


def check_simplex_diagram(n: int) -> Dict[str, bool]:
    """On ∂Δⁿ the retraction of Ẽ⁰ₙ agrees with aₙ"""
    _check_range(0, n)
    bundle = _tilde(0, n)
    rim, match = boundary_match(simplex(n), bundle.shape)
    return {
        'retraction restricts to a': match.then(bundle['retraction']) == rim.then(a_map(n)),
        'core is a globe': bundle['core'].source == globe(n),
    }

