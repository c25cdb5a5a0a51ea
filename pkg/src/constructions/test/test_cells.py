"""
Tests for cell extensions, substitution, unitors and shells
"""

import pytest

from src.errors import BoundaryMismatch, IndexOutOfRange, NotSpherical, NotSubmolecule, Unsupported
from src.maps import find_unique_iso
from src.molecule import boundary_poset, has_spherical_boundary, is_atom, is_molecule
from src.ogposet import ClosedSubset, Sign, boundary, closure
from src.constructions import (
    boundary_atom,
    cell_extension,
    comp_globe,
    compose_atom,
    dual,
    fixture,
    globe,
    point,
    shell,
    shell_kcomp,
    simplex,
    substitution,
    unitor_atom,
)


def _sides(W):
    """Number of top-dimensional cells in the input and output boundary of an atom"""
    n = W.dim - 1
    return (len(boundary(W, W.whole(), n, Sign.MINUS, granular=True)),
            len(boundary(W, W.whole(), n, Sign.PLUS, granular=True)))


def _end(P, side):
    return boundary(P, P.whole(), 0, side)


# ============ Cell extensions ============

def test_arrow_between_points():
    bundle = cell_extension(point(), point())
    assert find_unique_iso(bundle.shape, globe(1)) is not None
    assert bundle['input'].is_injective() and bundle['output'].is_injective()


def test_globes_are_iterated_cell_extensions():
    for n in range(1, 4):
        bundle = cell_extension(globe(n - 1), globe(n - 1))
        assert find_unique_iso(bundle.shape, globe(n)) is not None


def test_binary_composition_atoms():
    assert find_unique_iso(cell_extension(globe(1), fixture('path2')).shape, comp_globe(2).shape) is not None
    reversed_shape = cell_extension(fixture('path2'), globe(1)).shape
    assert find_unique_iso(reversed_shape, dual(comp_globe(2).shape, {2})) is not None


def test_cell_extension_keeps_ids_of_its_input():
    U = fixture('path2')
    bundle = cell_extension(U, globe(1))
    assert all(bundle['input'].apply_id(name) == name for name in U.ids)
    assert bundle.shape.dim == 2 and is_atom(bundle.shape)


def test_cell_extension_mismatches():
    with pytest.raises(BoundaryMismatch):
        cell_extension(globe(1), globe(2))
    with pytest.raises(BoundaryMismatch):
        cell_extension(simplex(2), globe(2))
    with pytest.raises(NotSpherical):
        cell_extension(fixture('horizontal2'), fixture('horizontal2'))


def test_boundary_and_composition_atoms():
    path = fixture('path2')
    assert find_unique_iso(boundary_atom(path).shape, globe(1)) is not None
    composite = compose_atom(path).shape
    assert len(composite) == 7
    assert _sides(composite) == (2, 1)
    assert has_spherical_boundary(composite)
    with pytest.raises(Unsupported):
        boundary_atom(point())


# ============ Substitution ============

def test_substituting_a_cell_for_itself():
    U = fixture('vertical2')
    lower = closure(U, [U.of_dim(2)[0]])
    result = substitution(U, lower, globe(2)).shape
    assert find_unique_iso(result, U) is not None


def test_substituting_a_path_for_an_edge():
    U = fixture('path2')
    first = closure(U, [U.of_dim(1)[0]])
    bundle = substitution(U, first, fixture('path2'))
    assert find_unique_iso(bundle.shape, fixture('path3')) is not None
    assert bundle['inclusion'].is_injective()


def test_substituted_boundary_keeps_its_ids():
    U = fixture('path2')
    first = closure(U, [U.of_dim(1)[0]])
    result = substitution(U, first, fixture('path2')).shape
    assert {U.id_of(x) for x in U.of_dim(0)} <= set(result.ids)
    assert len(result.of_dim(0)) == 4


def test_substitution_needs_a_submolecule():
    U = fixture('vertical2')
    middle = [x for x in U.of_dim(1) if len(U.cofaces(x)) == 2][0]
    with pytest.raises(NotSubmolecule):
        substitution(U, closure(U, [middle]), globe(1))


def test_substitution_needs_matching_boundaries():
    U = fixture('path2')
    first = closure(U, [U.of_dim(1)[0]])
    with pytest.raises(BoundaryMismatch):
        substitution(U, first, globe(2))


# ============ Unitors ============

def test_left_unitor_on_an_arrow():
    U = globe(1)
    bundle = unitor_atom(U, _end(U, Sign.MINUS), Sign.MINUS)
    assert bundle.shape.dim == 2 and is_atom(bundle.shape)
    assert _sides(bundle.shape) == (1, 2)
    retraction = bundle['retraction']
    assert retraction.is_surjective() and retraction.target == U
    assert bundle['input'].then(retraction).by_id() == {name: name for name in U.ids}


def test_right_unitor_on_an_arrow():
    U = globe(1)
    bundle = unitor_atom(U, _end(U, Sign.PLUS), Sign.PLUS)
    assert _sides(bundle.shape) == (1, 2)
    assert bundle['retraction'].is_surjective()


def test_flipped_unitor_is_the_dual():
    U = globe(1)
    V = _end(U, Sign.MINUS)
    plain = unitor_atom(U, V, Sign.MINUS)
    flipped = unitor_atom(U, V, Sign.MINUS, flipped=True)
    assert flipped.shape == dual(plain.shape, {2})
    assert _sides(flipped.shape) == (2, 1)
    assert flipped['retraction'].is_surjective()


def test_unitor_on_a_triangle():
    D2 = simplex(2)
    lower = boundary(D2, D2.whole(), 1, Sign.MINUS)
    bundle = unitor_atom(D2, lower, Sign.MINUS)
    assert is_atom(bundle.shape) and bundle.shape.dim == 3
    assert bundle['retraction'].is_surjective()


def test_unitor_needs_a_boundary_submolecule():
    U = globe(1)
    with pytest.raises(NotSubmolecule):
        unitor_atom(U, _end(U, Sign.PLUS), Sign.MINUS)
    with pytest.raises(NotSubmolecule):
        unitor_atom(fixture('path2'), ClosedSubset(fixture('path2'), frozenset()), Sign.MINUS)


# ============ Shells ============

def test_low_dimensional_shells_are_trivial():
    bundle = shell(globe(1))
    assert bundle.shape == globe(1)
    assert bundle['inclusion'].is_isomorphism()


def test_shell_of_a_triangle():
    D2 = simplex(2)
    bundle = shell(D2)
    assert bundle['inclusion'].is_injective()
    assert bundle['inclusion'].source == D2
    shape = bundle.shape
    assert is_molecule(shape) is not None
    for side in (Sign.MINUS, Sign.PLUS):
        face, _ = boundary_poset(shape, 1, side)
        assert find_unique_iso(face, globe(1)) is not None


def test_shells_of_globe_composites():
    for n, k in ((2, 0), (2, 1), (3, 1)):
        bundle = shell_kcomp(n, k)
        assert bundle['inclusion'].is_injective()
        assert has_spherical_boundary(bundle.shape)
        face, _ = boundary_poset(bundle.shape, n - 1, Sign.MINUS)
        assert find_unique_iso(face, globe(n - 1)) is not None
    with pytest.raises(IndexOutOfRange):
        shell_kcomp(2, 2)


def test_shells_need_spherical_boundary():
    with pytest.raises(NotSpherical):
        shell(fixture('horizontal2'))


def main():
    """Run the cell checks as a script"""
    print("=" * 60)
    print("CELL CHECKS")
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
