"""
Tests for maps: validation, hom-set enumeration, isomorphisms, factorizations,
pushouts, reversed surjections and cell classification
"""

import pytest

from src.errors import HostMismatch, NotAMap, PreconditionFailed, SizeLimit
from src.maps import (
    check_map,
    classify_cell,
    enumerate_maps,
    find_isomorphisms,
    find_reducing_factorization,
    find_unique_iso,
    identity,
    image_factorization,
    pushout_inclusions,
    reverse_surjection,
)
from src.molecule import is_molecule
from src.constructions import codegeneracy, coface, comp_globe, cylinder, dual, empty, fixture, globe, point, simplex


# ============ Validation ============

def test_identity_and_terminal_maps():
    D3 = simplex(3)
    assert check_map(D3, D3, list(range(len(D3)))) == identity(D3)
    for n in range(4):
        f = check_map(globe(n), point(), [0] * (2 * n + 1))
        assert f.is_surjective()


def test_swapping_globe_sides_is_not_a_map():
    O2 = globe(2)
    swap = {"0-": "0-", "0+": "0+", "1-": "1+", "1+": "1-", "2": "2"}
    with pytest.raises(NotAMap) as info:
        check_map(O2, O2, swap)
    assert info.value.locus[0] in {"1-", "1+", "2"}


def test_partial_assignment_is_not_a_map():
    with pytest.raises(NotAMap):
        check_map(globe(1), globe(1), {"0-": "0-", "0+": "0+"})
    with pytest.raises(NotAMap):
        check_map(globe(1), globe(1), {"0-": "0-", "0+": "0+", "1": "missing"})


def test_composites_need_matching_ends():
    with pytest.raises(HostMismatch):
        identity(globe(1)).then(identity(globe(2)))
    # separately built copies of one shape compose by id
    f = identity(globe(2)).then(identity(globe(2)))
    assert f == identity(globe(2))


# ============ Enumeration ============

def test_maps_from_an_edge_into_a_triangle():
    maps = enumerate_maps(simplex(1), simplex(2))
    assert len(maps) == 6
    degenerate = [f for f in maps if len(f.image()) == 1]
    assert len(degenerate) == 3
    assert len(enumerate_maps(simplex(1), simplex(2), inclusions_only=True)) == 3


def test_faces_of_simplices_are_the_only_inclusions():
    for n in range(1, 4):
        inclusions = enumerate_maps(simplex(n - 1), simplex(n), inclusions_only=True)
        assert len(inclusions) == n + 1
        images = {f.image() for f in inclusions}
        assert images == {coface(k, n).image() for k in range(n + 1)}


def test_enumeration_size_limit():
    with pytest.raises(SizeLimit):
        enumerate_maps(globe(2), globe(2), limit=3)


# ============ Isomorphisms ============

def test_molecules_have_no_automorphisms():
    for name in ('globe1', 'globe2', 'globe3', 'simplex2', 'simplex3', 'cube2',
                 'path2', 'vertical2', 'horizontal2', 'comp_globe2'):
        P = fixture(name)
        assert len(P) <= 20
        autos = find_isomorphisms(P, P)
        assert autos == [identity(P)], name


def test_unique_iso_between_copies():
    iso = find_unique_iso(globe(2), globe(2))
    assert iso is not None and iso.is_isomorphism()
    assert iso.by_id() == {name: name for name in globe(2).ids}
    assert find_unique_iso(globe(2), simplex(2)) is None


# ============ Factorizations and pushouts ============

def test_image_factorization():
    inclusion = coface(0, 2)
    surjection, image_inclusion = image_factorization(inclusion)
    assert surjection.is_isomorphism()
    assert surjection.then(image_inclusion) == inclusion

    s0 = codegeneracy(0, 0)
    surjection, image_inclusion = image_factorization(s0)
    assert surjection.is_surjective() and image_inclusion.is_isomorphism()

    constant = s0.then(coface(0, 1))
    surjection, image_inclusion = image_factorization(constant)
    assert len(surjection.target) == 1
    assert surjection.then(image_inclusion) == constant


def test_pushout_over_nothing_is_a_disjoint_union():
    glued = pushout_inclusions(check_map(empty(), globe(1), []), check_map(empty(), globe(1), []))
    assert len(glued.shape) == 6
    assert glued.j1.image().isdisjoint(glued.j2.image())
    assert set(glued.shape.ids) == {"0-", "0+", "1", "0-'", "0+'", "1'"}


def test_pushout_over_a_point_is_a_path():
    i1 = check_map(point(), globe(1), {"0": "0+"})
    i2 = check_map(point(), globe(1), {"0": "0-"})
    glued = pushout_inclusions(i1, i2)
    assert len(glued.shape) == 5
    assert glued.j1.apply_id("0+") == glued.j2.apply_id("0-")
    assert is_molecule(glued.shape) is not None


def test_pushout_needs_inclusions():
    collapse = check_map(globe(1), point(), [0, 0, 0])
    with pytest.raises(PreconditionFailed):
        pushout_inclusions(identity(globe(1)), collapse)


# ============ Surjections and cells ============

def test_reverse_of_a_cylinder_projection():
    p = cylinder(globe(1))['projection']
    reverse = reverse_surjection(p)
    assert reverse.source == dual(p.source, {2})
    assert reverse.is_surjective()
    assert reverse.assignment == p.assignment


def test_reverse_of_a_codegeneracy():
    reverse = reverse_surjection(codegeneracy(0, 0))
    assert reverse.source == dual(simplex(1), {1})


def test_reverse_needs_a_dimension_drop():
    with pytest.raises(PreconditionFailed):
        reverse_surjection(identity(globe(1)))


def test_classify_cells():
    assert classify_cell(identity(globe(2))).kind == 'nondegenerate'

    p = cylinder(globe(1))['projection']
    degenerate = classify_cell(p)
    assert degenerate.kind == 'degenerate'
    assert degenerate.surjection.target.dim == 1

    constant = classify_cell(check_map(globe(2), point(), [0] * 5))
    assert constant.kind == 'degenerate'
    assert len(constant.surjection.target) == 1


def test_reducing_factorization_through_a_globe():
    bundle = comp_globe(2)
    x = bundle['p1']
    found = find_reducing_factorization(x, [globe(1), globe(2)])
    assert found is not None
    surjection, remainder = found
    assert surjection.then(remainder) == x
    assert find_reducing_factorization(identity(globe(2)), [globe(2)]) is None


def main():
    """Run the map checks as a script"""
    print("=" * 60)
    print("MAP CHECKS")
    print("=" * 60)
    checks = [name for name in globals() if name.startswith("test_")]
    failures = 0
    for name in checks:
        try:
            globals()[name]()
            print(f"✓ {name}")
        except Exception as e:
            failures += 1
            print(f"❌ {name}: {e!r}")
    print(f"\n{len(checks) - failures}/{len(checks)} passed")


if __name__ == "__main__":
    main()
