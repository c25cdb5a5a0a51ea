"""
Simplices as molecules: co-faces, co-degeneracies and the maps aₙ: Δⁿ ->> Oⁿ, cₙ: Δⁿ ->> Gⁿ

Simplex elements are ⊤/⊥ words, one letter per vertex. Co-face d^k misses
vertex k; with these join signs d^k lands in the output boundary for even k
and in the input boundary for odd k.
"""

from typing import Dict

from src.errors import IndexOutOfRange, InvariantViolation
from src.maps import OgpMap, check_map, find_unique_iso, identity
from src.ogposet import Sign
from src.settings import get_logger
from .cylinders import cylinder_map, fattening
from .generators import comp_globe, globe, globe_inclusion, simplex
from .products import join_map, word_naming

logger = get_logger(__name__)

TOP, BOTTOM = "⊤", "⊥"

A_MODES = ('explicit', 'recursive')


def _canonical(f: OgpMap, source_dim: int, target_dim: int) -> OgpMap:
    return check_map(simplex(source_dim), simplex(target_dim), f.by_id())


def coface(k: int, n: int) -> OgpMap:
    """
    d^k: Δⁿ⁻¹ ↪ Δⁿ as id ⋆ ι ⋆ id, ι: ∅ ↪ 1

    Raises:
        IndexOutOfRange: unless 0 <= k <= n
    """
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"co-face d^{k} needs 0 <= k <= {n}", locus=(k, n))
    point = simplex(0)
    initial = check_map(simplex(-1), point, [])
    inner = join_map(identity(simplex(k - 1)), initial, word_naming)
    return _canonical(join_map(inner, identity(simplex(n - k - 1)), word_naming), n - 1, n)


def codegeneracy(k: int, n: int) -> OgpMap:
    """
    s^k: Δⁿ⁺¹ ->> Δⁿ as id ⋆ p ⋆ id, p: 1 ⋆ 1 ->> 1

    Raises:
        IndexOutOfRange: unless 0 <= k <= n
    """
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"co-degeneracy s^{k} needs 0 <= k <= {n}", locus=(k, n))
    collapse = check_map(simplex(1), simplex(0), [0, 0, 0])
    inner = join_map(identity(simplex(k - 1)), collapse, word_naming)
    return _canonical(join_map(inner, identity(simplex(n - k - 1)), word_naming), n + 1, n)


# ============ aₙ ============

def a_word(word: str) -> str:
    """
    Globe element hit by a simplex word under aₙ, n = len(word) - 1

    ⊤ⁿ⁺¹ goes to the top, ⊥ᵏ⊤ʲ to (j-1)⁺ and (...)⊤⊥ᵏ⊤ʲ to j⁻.
    """
    n = len(word) - 1
    rest = word.rstrip(TOP)
    j = len(word) - len(rest)
    if not rest:
        return str(n)
    if rest == BOTTOM * len(rest):
        return f"{j - 1}+"
    return f"{j}-"


def _a_explicit(n: int) -> OgpMap:
    source = simplex(n)
    return check_map(source, globe(n), {word: a_word(word) for word in source.ids})


def _a_recursive(n: int) -> OgpMap:
    if n == 0:
        return check_map(simplex(0), globe(0), {TOP: "0"})
    composite = fattening(codegeneracy(0, n - 1))
    for i in range(1, n):
        step = fattening(codegeneracy(0, n - 1 - i))
        for _ in range(i):
            step = cylinder_map(step)
        composite = composite.then(step)
    iso = find_unique_iso(composite.target, globe(n))
    if iso is None:
        raise InvariantViolation(f"iterated cylinder on a point is not the {n}-globe", locus=n)
    return composite.then(iso)


def a_map(n: int, mode: str = 'explicit') -> OgpMap:
    """
    aₙ: Δⁿ ->> Oⁿ

    Args:
        n: Dimension, at least 0
        mode: 'explicit' reads the word table; 'recursive' composes the fattened
            co-degeneracies s⁰≺; O(s⁰≺); ...; Oⁿ⁻¹(s⁰≺) and also checks the table

    Raises:
        IndexOutOfRange: for negative n
        InvariantViolation: when the recursive and explicit maps differ
    """
    if n < 0:
        raise IndexOutOfRange("a_map needs n >= 0", locus=n)
    if mode not in A_MODES:
        raise ValueError(f"unknown a_map mode {mode!r}")
    explicit = _a_explicit(n)
    if mode == 'explicit':
        return explicit
    recursive = _a_recursive(n)
    if recursive != explicit:
        diff = {k: v for k, v in recursive.by_id().items() if explicit.by_id()[k] != v}
        raise InvariantViolation(f"recursive a_{n} disagrees with the word table", locus=diff)
    logger.debug("a_%d recursive and explicit agree on %d elements", n, len(recursive.source))
    return recursive


def check_a_faces(n: int) -> Dict[str, bool]:
    """d⁰;aₙ₊₁ = aₙ;ι⁺ and d¹;aₙ₊₁ = aₙ;ι⁻"""
    upper, lower = a_map(n + 1), a_map(n)
    return {
        'd0;a = a;iota_plus': coface(0, n + 1).then(upper) == lower.then(globe_inclusion(n, Sign.PLUS)),
        'd1;a = a;iota_minus': coface(1, n + 1).then(upper) == lower.then(globe_inclusion(n, Sign.MINUS)),
    }


# ============ cₙ ============

def c_word(word: str) -> str:
    """Element of Gⁿ hit by a simplex word under cₙ, n = len(word) - 1 >= 2"""
    n = len(word) - 1
    m = n - 1
    tail = TOP * (n - 2)
    if word == TOP * (n + 1):
        return str(n)
    if word == BOTTOM + TOP * n:
        return f"{m}+_2"
    if word == TOP + TOP + BOTTOM + tail:
        return f"{m}+_1"
    if word == BOTTOM + TOP + BOTTOM + tail:
        return f"{m - 1}_0"
    return a_word(word)


def c_map(n: int) -> OgpMap:
    """
    cₙ: Δⁿ ->> Gⁿ, splitting the output cell of aₙ in two

    Raises:
        IndexOutOfRange: for n < 2
    """
    if n < 2:
        raise IndexOutOfRange("c_map needs n >= 2", locus=n)
    source = simplex(n)
    return check_map(source, comp_globe(n).shape, {word: c_word(word) for word in source.ids})


def check_c_diagrams(n: int) -> Dict[str, bool]:
    """The three face squares of cₙ and the triangle cₙ;p₁ = aₙ"""
    c, bundle = c_map(n), comp_globe(n)
    a = a_map(n - 1)
    return {
        'd0;c = a;iota_plus_2': coface(0, n).then(c) == a.then(bundle['iota_plus_2']),
        'd1;c = a;iota_minus': coface(1, n).then(c) == a.then(bundle['iota_minus']),
        'd2;c = a;iota_plus_1': coface(2, n).then(c) == a.then(bundle['iota_plus_1']),
        'c;p1 = a': c.then(bundle['p1']) == a_map(n),
    }
