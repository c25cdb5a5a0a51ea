"""
Generators: point, empty shape, globes, oriented simplices, cubes and the
binary-composition atoms Gⁿ

Globe ids are "k-"/"k+" for k < n and "n" for the top. Simplex ids are
⊤/⊥ words of length n+1 with at least one ⊤; the vertices are the words with
a single ⊤. Cube ids are words over "-", "+", "1".
"""

from typing import Dict, List, Tuple

from src.errors import Unsupported
from src.maps import OgpMap, check_map
from src.ogposet import OrientedGradedPoset, Sign, build_ogp, rename
from .bundle import ShapeBundle
from .products import gray_product, join, word_naming

KINDS = ('point', 'empty', 'globe', 'simplex', 'cube', 'comp_globe')


def empty() -> OrientedGradedPoset:
    return build_ogp([], [])


def point() -> OrientedGradedPoset:
    return globe(0)


def _globe_covers(k: int, lower: Tuple[str, str], names: List[str]) -> List[Tuple[str, str, Sign]]:
    covers = []
    for name in names:
        covers += [(name, lower[0], Sign.MINUS), (name, lower[1], Sign.PLUS)]
    return covers


def globe(n: int) -> OrientedGradedPoset:
    """The n-globe Oⁿ: a pair k⁻, k⁺ in each dimension k < n under a single top"""
    elements = []
    covers = []
    for k in range(n):
        pair = [f"{k}-", f"{k}+"]
        elements += pair
        if k > 0:
            covers += _globe_covers(k, (f"{k-1}-", f"{k-1}+"), pair)
    elements.append(str(n))
    if n > 0:
        covers += _globe_covers(n, (f"{n-1}-", f"{n-1}+"), [str(n)])
    return build_ogp(elements, covers)


def globe_inclusion(n: int, side: Sign) -> OgpMap:
    """ι^α: Oⁿ ↪ Oⁿ⁺¹ onto the α-boundary"""
    source, target = globe(n), globe(n + 1)
    assignment = {name: name for name in source.ids}
    assignment[str(n)] = f"{n}{side.char}"
    return check_map(source, target, assignment)


def simplex(n: int) -> OrientedGradedPoset:
    """
    The oriented n-simplex Δⁿ as the join Δⁿ⁻¹ ⋆ Δ⁰; Δ⁻¹ is empty
    """
    if n < 0:
        return empty()
    shape = build_ogp(["⊤"], [])
    for _ in range(n):
        vertex = build_ogp(["⊤"], [])
        shape = join(shape, vertex, word_naming(shape, vertex))
    return shape


def arrow() -> OrientedGradedPoset:
    return rename(globe(1), {"0-": "-", "0+": "+", "1": "1"})


def cube(n: int) -> OrientedGradedPoset:
    """The n-cube as the n-fold Gray product of O¹"""
    if n == 0:
        return point()
    shape = arrow()
    for _ in range(n - 1):
        shape = gray_product(shape, arrow(), lambda x, y: x + y)
    return shape


def comp_globe(n: int) -> ShapeBundle:
    """
    Gⁿ = Oⁿ⁻¹ ⇒ (Oⁿ⁻¹ #ₙ₋₂ Oⁿ⁻¹), with p1, p2: Gⁿ ->> Oⁿ and the inclusions of its three (n-1)-cells

    Raises:
        Unsupported: for n < 2
    """
    if n < 2:
        raise Unsupported("comp_globe needs n >= 2", locus=n)
    m = n - 1
    elements = []
    covers = []
    for k in range(m - 1):
        pair = [f"{k}-", f"{k}+"]
        elements += pair
        if k > 0:
            covers += _globe_covers(k, (f"{k-1}-", f"{k-1}+"), pair)
    low_minus, middle, low_plus = f"{m-1}-", f"{m-1}_0", f"{m-1}+"
    elements += [low_minus, middle, low_plus]
    if m - 1 > 0:
        covers += _globe_covers(m - 1, (f"{m-2}-", f"{m-2}+"), [low_minus, middle, low_plus])
    cell_minus, cell_first, cell_second, top = f"{m}-", f"{m}+_1", f"{m}+_2", str(n)
    elements += [cell_minus, cell_first, cell_second, top]
    covers += [
        (cell_minus, low_minus, Sign.MINUS), (cell_minus, low_plus, Sign.PLUS),
        (cell_first, low_minus, Sign.MINUS), (cell_first, middle, Sign.PLUS),
        (cell_second, middle, Sign.MINUS), (cell_second, low_plus, Sign.PLUS),
        (top, cell_minus, Sign.MINUS), (top, cell_first, Sign.PLUS), (top, cell_second, Sign.PLUS),
    ]
    shape = build_ogp(elements, covers)

    target = globe(n)
    lower: Dict[str, str] = {f"{k}{a}": f"{k}{a}" for k in range(m - 1) for a in "-+"}
    common = dict(lower, **{low_minus: low_minus, low_plus: low_plus, cell_minus: cell_minus, top: top})
    p1 = dict(common, **{middle: low_minus, cell_first: low_minus, cell_second: f"{m}+"})
    p2 = dict(common, **{middle: low_plus, cell_first: f"{m}+", cell_second: low_plus})

    face = globe(m)
    face_lower = dict(lower)
    iota_minus = dict(face_lower, **{low_minus: low_minus, low_plus: low_plus, str(m): cell_minus})
    iota_first = dict(face_lower, **{low_minus: low_minus, low_plus: middle, str(m): cell_first})
    iota_second = dict(face_lower, **{low_minus: middle, low_plus: low_plus, str(m): cell_second})

    return ShapeBundle(shape, {
        'p1': check_map(shape, target, p1),
        'p2': check_map(shape, target, p2),
        'iota_minus': check_map(face, shape, iota_minus),
        'iota_plus_1': check_map(face, shape, iota_first),
        'iota_plus_2': check_map(face, shape, iota_second),
    })


def generate(kind: str, n: int = 0) -> ShapeBundle:
    """
    Build a named generator

    Args:
        kind: One of point, empty, globe, simplex, cube, comp_globe
        n: Dimension

    Returns:
        ShapeBundle; globes carry 'iota_minus'/'iota_plus' from the (n-1)-globe,
        comp_globe carries p1, p2 and its cell inclusions

    Raises:
        Unsupported: for an unknown kind or comp_globe with n < 2
    """
    if kind == 'point':
        return ShapeBundle(point())
    if kind == 'empty':
        return ShapeBundle(empty())
    if kind == 'globe':
        maps = {}
        if n > 0:
            maps = {'iota_minus': globe_inclusion(n - 1, Sign.MINUS), 'iota_plus': globe_inclusion(n - 1, Sign.PLUS)}
        return ShapeBundle(globe(n), maps)
    if kind == 'simplex':
        return ShapeBundle(simplex(n))
    if kind == 'cube':
        return ShapeBundle(cube(n))
    if kind == 'comp_globe':
        return comp_globe(n)
    raise Unsupported(f"unknown generator {kind!r}", locus=kind)
