"""
Tests for oriented graded posets: construction, closure, boundaries, thinness
"""

import pytest

from src.errors import (
    CyclicCovers,
    DimMismatch,
    DuplicateEdge,
    DuplicateElement,
    NotGraded,
    TransitiveEdge,
    UnknownIndex,
)
from src.ogposet import (
    Sign,
    boundary,
    build_ogp,
    closure,
    is_oriented_thin,
    restrict,
    skeleton,
    subset_profile,
    with_flipped_sign,
    rename,
    fresh_name,
)


def globe_data(n):
    elements = []
    covers = []
    for k in range(n):
        elements += [f"{k}-", f"{k}+"]
        if k > 0:
            for alpha in "-+":
                covers += [(f"{k}{alpha}", f"{k-1}-", '-'), (f"{k}{alpha}", f"{k-1}+", '+')]
    elements.append(str(n))
    if n > 0:
        covers += [(str(n), f"{n-1}-", '-'), (str(n), f"{n-1}+", '+')]
    return elements, covers


def globe(n):
    return build_ogp(*globe_data(n))


def ids_of(P, U):
    return {P.id_of(x) for x in U.members}


# ============ Sign ============

def test_sign_rule():
    assert Sign.PLUS * Sign.PLUS is Sign.PLUS
    assert Sign.MINUS * Sign.MINUS is Sign.PLUS
    assert Sign.PLUS * Sign.MINUS is Sign.MINUS
    assert Sign.MINUS * Sign.PLUS is Sign.MINUS
    assert -Sign.PLUS is Sign.MINUS
    assert Sign.parity(3) is Sign.MINUS and Sign.parity(0) is Sign.PLUS
    assert Sign.parse('+') is Sign.PLUS and Sign.parse(-1) is Sign.MINUS
    with pytest.raises(ValueError):
        Sign.parse('±')


# ============ build_ogp ============

def test_single_point():
    P = build_ogp(["pt"], [])
    assert P.size == 1
    assert P.dim == 0


def test_globe_one():
    P = build_ogp([("0-", 0), ("0+", 0), ("1", 1)], [("1", "0-", '-'), ("1", "0+", '+')])
    assert P.dims == (0, 0, 1)
    assert P.sign(2, 0) is Sign.MINUS


def test_elements_sorted_by_dim():
    P = build_ogp(["top", "a", "b"], [(0, 1, '-'), (0, 2, '+')])
    assert P.ids == ("a", "b", "top")


def test_transitive_edge_rejected():
    elements = ["a", "b", "c", "d"]
    covers = [("b", "a", '+'), ("c", "b", '+'), ("d", "c", '+'), ("d", "a", '+')]
    with pytest.raises(TransitiveEdge):
        build_ogp(elements, covers)


def test_structural_errors():
    with pytest.raises(DuplicateElement):
        build_ogp(["a", "a"], [])
    with pytest.raises(UnknownIndex):
        build_ogp(["a"], [("a", "z", '+')])
    with pytest.raises(DuplicateEdge):
        build_ogp(["a", "b"], [("b", "a", '+'), ("b", "a", '-')])
    with pytest.raises(CyclicCovers):
        build_ogp(["a", "b"], [("b", "a", '+'), ("a", "b", '+')])
    with pytest.raises(NotGraded):
        # c covers a point and an edge
        build_ogp(["a", "b", "d", "e", "c"], [("e", "a", '-'), ("e", "b", '+'), ("c", "e", '+'), ("c", "d", '-')])
    with pytest.raises(DimMismatch):
        build_ogp([("a", 0), ("e", 2)], [("e", "a", '+')])


def test_equality_ignores_declaration_order():
    elements, covers = globe_data(2)
    P = build_ogp(elements, covers)
    Q = build_ogp(list(reversed(elements)), list(reversed(covers)))
    assert P == Q
    assert hash(P) == hash(Q)
    assert P != with_flipped_sign(P, P.index_of("2"), P.index_of("1-"))


# ============ closure ============

def test_closure_examples():
    P = globe(2)
    assert len(closure(P, {P.index_of("2")})) == 5
    assert ids_of(P, closure(P, {P.index_of("1-")})) == {"1-", "0-", "0+"}
    assert len(closure(P, set())) == 0
    with pytest.raises(UnknownIndex):
        closure(P, {99})


def test_closure_idempotent_and_monotone():
    P = globe(3)
    for x in range(len(P)):
        once = closure(P, {x})
        assert closure(P, once.members) == once
        for y in once.members:
            assert closure(P, {y}).members <= once.members


# ============ boundary ============

def test_globe_input_boundary():
    P = globe(2)
    U = P.whole()
    assert ids_of(P, boundary(P, U, 1, Sign.MINUS)) == {"1-", "0-", "0+"}
    assert ids_of(P, boundary(P, U, 0, Sign.PLUS)) == {"0+"}
    assert ids_of(P, boundary(P, U, 1, None)) == {"1-", "1+", "0-", "0+"}
    assert boundary(P, U, 2, Sign.MINUS) == U
    assert boundary(P, U, 5, Sign.PLUS) == U


def test_granular_boundary():
    P = globe(2)
    delta = boundary(P, P.whole(), 1, Sign.PLUS, granular=True)
    assert {P.id_of(x) for x in delta} == {"1+"}


def test_globularity_and_idempotence():
    P = globe(4)
    U = P.whole()
    for n in range(4):
        for alpha in (Sign.MINUS, Sign.PLUS):
            target = boundary(P, U, n, alpha)
            assert boundary(P, target, n, alpha) == target
            for beta in (Sign.MINUS, Sign.PLUS):
                assert boundary(P, boundary(P, U, n + 1, beta), n, alpha) == target


# ============ thinness ============

def test_globes_are_thin():
    assert is_oriented_thin(globe(3)).ok
    assert is_oriented_thin(build_ogp(["x"], [])).ok


def test_flipped_globe_is_not_thin():
    P = globe(2)
    Q = with_flipped_sign(P, P.index_of("2"), P.index_of("1-"))
    report = is_oriented_thin(Q)
    assert not report.ok
    assert report.interval == ("0-", "2")


def test_every_single_flip_breaks_thinness():
    P = globe(3)
    for upper, lower, _ in P.covers():
        assert not is_oriented_thin(with_flipped_sign(P, upper, lower)).ok


# ============ skeleton, restrict, profile ============

def test_skeleton():
    P = globe(3)
    S, embedding = skeleton(P, 1)
    assert S.size == 4
    assert all(P.dims[x] <= 1 for x in embedding)
    full, _ = skeleton(P, P.dim)
    assert full == P


def test_restrict_keeps_ids_and_signs():
    P = globe(2)
    Q, embedding = restrict(P, closure(P, {P.index_of("1+")}))
    assert set(Q.ids) == {"0-", "0+", "1+"}
    assert Q.sign(Q.index_of("1+"), Q.index_of("0-")) is Sign.MINUS
    assert [P.id_of(x) for x in embedding] == list(Q.ids)


def test_subset_profile():
    P = globe(2)
    assert subset_profile(P, P.whole()) == (2, True, frozenset({P.index_of("2")}))
    empty = closure(P, set())
    assert subset_profile(P, empty) == (-1, True, frozenset())
    mixed = build_ogp(["a", "b", "e", "c"], [("e", "a", '-'), ("e", "b", '+')])
    profile = subset_profile(mixed, mixed.whole())
    assert profile.dim == 1 and not profile.pure
    assert {mixed.id_of(x) for x in profile.maximal_elements} == {"e", "c"}


def test_rename_and_fresh_name():
    P = globe(1)
    Q = rename(P, {"1": "top"})
    assert Q.has_id("top") and not Q.has_id("1")
    assert fresh_name("x", {"x", "x'"}) == "x''"


def main():
    """Run the ogposet checks as a script"""
    print("=" * 60)
    print("OGPOSET CHECKS")
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
