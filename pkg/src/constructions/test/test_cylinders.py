"""
Tests for cylinders, relative cylinders, cylinders on maps and fattenings
"""

import pytest

from src.errors import PreconditionFailed
from src.maps import find_unique_iso, identity
from src.molecule import check_complex, has_spherical_boundary, is_atom
from src.constructions import (
    CylinderCoordinates,
    a_map,
    codegeneracy,
    coface,
    cylinder,
    cylinder_map,
    fattening,
    fixture,
    globe,
    point,
    relative_cylinder,
    simplex,
)


def test_cylinders_on_globes_are_globes():
    assert find_unique_iso(cylinder(point()).shape, globe(1)) is not None
    for n in range(1, 3):
        assert find_unique_iso(cylinder(globe(n)).shape, globe(n + 1)) is not None


def test_cylinder_sizes():
    # every collapsed boundary element saves two
    D2 = simplex(2)
    assert len(cylinder(D2).shape) == 3 * len(D2) - 2 * (len(D2) - 1)


def test_cylinder_structure_maps():
    for name in ('globe2', 'simplex2', 'path2'):
        U = fixture(name)
        bundle = cylinder(U)
        projection = bundle['projection']
        assert projection.is_surjective()
        for side in ('iota_minus', 'iota_plus'):
            assert bundle[side].is_injective()
            assert bundle[side].then(projection) == identity(U)


def test_cylinder_on_a_molecule_is_regular():
    shape = cylinder(fixture('path2')).shape
    assert has_spherical_boundary(shape)
    assert check_complex(shape).ok


def test_relative_cylinder_without_collapse_is_the_product():
    bundle = relative_cylinder(globe(1), [])
    assert len(bundle.shape) == 9
    assert find_unique_iso(bundle.shape, fixture('cube2')) is not None


def test_relative_cylinder_needs_a_boundary_subset():
    O1 = globe(1)
    with pytest.raises(PreconditionFailed):
        relative_cylinder(O1, [O1.index_of("1")])


def test_partially_collapsed_cylinder():
    O1 = globe(1)
    bundle = relative_cylinder(O1, [O1.index_of("0-")])
    assert len(bundle.shape) == 7
    assert is_atom(bundle.shape)


def test_cylinder_coordinates():
    bundle = cylinder(globe(1))
    coords = CylinderCoordinates(bundle)
    kinds = sorted(o for o, _ in coords.coordinates.values())
    assert kinds == ['+', '-', '0', '0', '1']


def test_cylinder_of_maps():
    assert cylinder_map(identity(globe(1))) == identity(cylinder(globe(1)).shape)
    f = cylinder_map(a_map(2))
    assert f.is_surjective()
    assert f.target == cylinder(globe(2)).shape


def test_cylinder_map_needs_equal_dimensions():
    with pytest.raises(PreconditionFailed):
        cylinder_map(codegeneracy(0, 0))


def test_fattening_projects_back():
    for k, n in ((0, 0), (0, 1), (1, 1)):
        s = codegeneracy(k, n)
        fat = fattening(s)
        assert fat.then(cylinder(simplex(n))['projection']) == s


def test_fattening_needs_a_surjection():
    with pytest.raises(PreconditionFailed):
        fattening(coface(0, 1))


def main():
    """Run the cylinder checks as a script"""
    print("=" * 60)
    print("CYLINDER CHECKS")
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
