"""
Tests for nerves, Smith normal form, homology, Euler characteristics and the
last vertex map

Smith forms are compared against sympy's implementation.
"""

import numpy as np
import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from src.errors import IndexOutOfRange, InvariantViolation
from src.ogposet import boundary
from src.constructions import fixture, globe, simplex
from src.simplicial import (
    HomologySummary,
    boundary_matrices,
    chain_image,
    euler,
    homology,
    last_vertex_map,
    nerve,
    smith_decomposition,
    smith_normal_form,
)

ORACLE_MATRICES = [
    [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
    [[0, 3, 0], [6, 0, 0], [0, 0, 9]],
    [[1, 2, 3], [4, 5, 6], [7, 8, 10]],
    [[4, 0], [0, 6]],
    [[12, 18], [30, 42]],
]


def _sphere(P):
    """Full boundary of an atom"""
    return boundary(P, P.whole(), P.dim - 1, None)


def _oracle_factors(rows):
    D = sympy_smith_normal_form(Matrix(rows), domain=ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)


# ============ Nerves ============

def test_nerve_counts():
    assert nerve(simplex(2)).counts() == [7, 12, 6]
    assert nerve(globe(1)).counts() == [3, 2]
    assert nerve(_sphere(simplex(2))).counts() == [6, 6]


def test_nerve_chains_are_increasing():
    C = nerve(globe(2))
    for level in C.chains:
        for chain in level:
            assert list(chain) == sorted(chain)
            for a, b in zip(chain, chain[1:]):
                assert globe(2).dims[a] < globe(2).dims[b]


def test_boundary_matrices_compose_to_zero():
    C = nerve(simplex(2))
    matrices = boundary_matrices(C, reduced=True)
    assert matrices[0].shape == (1, 7)
    assert [D.shape for D in matrices[1:]] == [(7, 12), (12, 6)]
    for first, second in zip(matrices, matrices[1:]):
        assert not np.any(first.dot(second) != 0)


# ============ Smith normal form ============

def test_smith_small_cases():
    assert smith_normal_form([[2, 0], [0, 3]]).factors == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    assert smith_normal_form(np.eye(3, dtype=int)).factors == [1, 1, 1]
    assert smith_normal_form([[2, 4, 6], [4, 6, 8]]).factors == [2, 2]


def test_smith_agrees_with_sympy():
    for rows in ORACLE_MATRICES:
        assert smith_normal_form(rows).factors == _oracle_factors(rows), rows


def test_smith_decomposition_is_unimodular():
    for rows in ORACLE_MATRICES:
        U, D, V = smith_decomposition(rows)
        assert (U.dot(np.array(rows, dtype=object)).dot(V) == D).all()
        assert Matrix(U.tolist()).det() in (1, -1)
        assert Matrix(V.tolist()).det() in (1, -1)
        off_diagonal = [D[i, j] for i in range(D.shape[0]) for j in range(D.shape[1]) if i != j]
        assert not any(off_diagonal)


def test_smith_needs_a_matrix():
    with pytest.raises(ValueError):
        smith_normal_form([1, 2, 3])


def test_smith_of_a_nerve_boundary_operator():
    D = boundary_matrices(nerve(_sphere(simplex(2))))[1]
    rows = D.tolist()
    assert smith_normal_form(D).factors == _oracle_factors(rows)
    assert smith_normal_form(D).rank == 5


# ============ Homology ============

def test_atoms_and_molecules_are_acyclic():
    for name in ('globe2', 'globe3', 'simplex2', 'simplex3', 'cube2', 'comp_globe2', 'path2', 'vertical2',
                 'cylinder_simplex2', 'shell_simplex2', 'extr0_3', 'extr1_2', 'extr0_3_tilde'):
        assert homology(nerve(fixture(name)), reduced=True).is_trivial(), name


def test_spherical_boundaries_are_spheres():
    for P in (globe(2), globe(3), simplex(2), simplex(3), fixture('cylinder_simplex2'), fixture('extr1_2')):
        summary = homology(nerve(_sphere(P)), reduced=True)
        assert summary.nonzero() == {P.dim - 1: (1, [])}


def test_triangle_boundary_lines():
    summary = homology(nerve(_sphere(simplex(2))), reduced=True)
    assert summary.lines() == ["H_-1 = 0", "H_0 = 0", "H_1 = Z"]
    assert summary.to_dict()['groups'][2] == {'degree': 1, 'betti': 1, 'torsion': []}


def test_disjoint_points():
    summary = homology(nerve(fixture('two_points')))
    assert summary.betti == {0: 2}
    assert summary.group(0) == "Z^2"
    assert homology(nerve(fixture('two_points')), reduced=True).betti[0] == 1


def test_group_names_with_torsion():
    summary = HomologySummary(False, {1: 1}, {1: [2, 4]})
    assert summary.group(1) == "Z ⊕ Z/2 ⊕ Z/4"
    assert not summary.is_trivial()


# ============ Euler characteristic ============

def test_euler_characteristics():
    assert euler(globe(2)) == (1, 1)
    assert euler(simplex(3)) == (1, 1)
    assert euler(_sphere(globe(3))) == (2, 2)
    assert euler(_sphere(simplex(2))) == (0, 0)


# ============ Last vertex map ============

def test_last_vertex_map():
    assert last_vertex_map(1).by_id() == {"⊤⊥": 0, "⊥⊤": 1, "⊤⊤": 1}
    gamma = last_vertex_map(2)
    assert gamma.by_id()["⊤⊥⊤"] == 2
    assert gamma.by_id()["⊤⊤⊥"] == 1
    with pytest.raises(IndexOutOfRange):
        last_vertex_map(-1)


def test_chain_images_are_weakly_increasing():
    gamma = last_vertex_map(2)
    C = nerve(simplex(2))
    for level in C.chains:
        for chain in level:
            image = chain_image(gamma, chain)
            assert list(image) == sorted(image)
    D2 = simplex(2)
    with pytest.raises(InvariantViolation):
        chain_image(gamma, (D2.index_of("⊥⊥⊤"), D2.index_of("⊤⊤⊥")))


def main():
    """Run the simplicial checks as a script"""
    print("=" * 60)
    print("SIMPLICIAL CHECKS")
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
