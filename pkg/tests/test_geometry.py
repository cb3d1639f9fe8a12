"""Exact linear algebra, branches, and tangency classification."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from c5cone import (
    Branch,
    CycloScalar,
    DependentVectors,
    DimensionMismatch,
    Direction,
    DuplicateBranch,
    IncompatibleSystem,
    Plane,
    c5_cone,
    check_compatibility,
    classify,
    curve,
    curve_from_exponents,
    matrix_rank,
    null_space,
    plane_equations,
    plane_from_vectors,
    rref,
    tangent_direction,
    zeta,
)
from fractions import Fraction


def vec(*entries):
    return [
        e if isinstance(e, CycloScalar) else CycloScalar.rational(e)
        for e in entries
    ]


def small_matrices():
    entry = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.integers(min_value=1, max_value=4).flatmap(
        lambda n: st.lists(
            st.lists(entry, min_size=n, max_size=n), min_size=1, max_size=4
        )
    ).map(lambda rows: [vec(*r) for r in rows])


# ---------------------------------------------------------------------------
# rref / rank / null space


def test_rref_known_matrix():
    reduced, pivots = rref([vec(0, 2, 4), vec(1, 1, 1)])
    assert list(pivots) == [0, 1]
    texts = [[e.text() for e in row] for row in reduced]
    assert texts == [["1", "0", "-1"], ["0", "1", "2"]]


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rref_is_idempotent(rows):
    reduced, pivots = rref(rows)
    again, pivots2 = rref([list(r) for r in reduced])
    assert pivots2 == pivots
    assert [[e.text() for e in r] for r in again] == [
        [e.text() for e in r] for r in reduced
    ]


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_nullity(rows):
    n = len(rows[0])
    rank = matrix_rank(rows)
    kernel = null_space(rows)
    assert rank + len(kernel) == n
    for k in kernel:
        for row in rows:
            dot = sum((a * b for a, b in zip(row, k)), CycloScalar.rational(0))
            assert dot.is_zero()


def test_rank_of_dependent_rows():
    assert matrix_rank([vec(1, 2), vec(2, 4)]) == 1
    assert matrix_rank([vec(0, 0)]) == 0


# ---------------------------------------------------------------------------
# directions and planes


def test_direction_normalizes_leading_entry():
    d = Direction(vec(2, 4, 6))
    assert d.key() == ("1", "2", "3")


def test_direction_ignores_complex_scale():
    z = zeta(3)
    d1 = Direction(vec(1, z, 0))
    d2 = Direction([z, z * z, CycloScalar.rational(0, conductor=3)])
    assert d1 == d2


def test_direction_rejects_zero_vector():
    with pytest.raises(ValueError):
        Direction(vec(0, 0, 0))


def test_plane_basis_is_canonical():
    p1 = plane_from_vectors(Direction(vec(1, 0, 1)), Direction(vec(0, 1, 1)))
    p2 = plane_from_vectors(Direction(vec(1, 1, 2)), Direction(vec(1, -1, 0)))
    assert p1 == p2
    assert p1.key() == p2.key()


def test_plane_contains_spanning_combinations():
    w, v = Direction(vec(1, 0, 2)), Direction(vec(0, 1, -1))
    p = plane_from_vectors(w, v)
    for a, b in ((1, 0), (0, 1), (2, 3), (-1, Fraction(1, 2))):
        combo = [
            CycloScalar.rational(a) * x + CycloScalar.rational(b) * y
            for x, y in zip(w.vec, v.vec)
        ]
        assert p.contains(Direction(combo))
    assert not p.contains(Direction(vec(0, 0, 1)))


def test_plane_rejects_dependent_spans():
    with pytest.raises(DependentVectors):
        plane_from_vectors(Direction(vec(1, 2, 0)), Direction(vec(2, 4, 0)))


def test_plane_equations_vanish_on_basis():
    p = plane_from_vectors(Direction(vec(1, 0, 1, 0)), Direction(vec(0, 1, 0, 1)))
    eqs = plane_equations(p)
    assert len(eqs) == 2
    for eq in eqs:
        for row in p.basis:
            dot = sum((a * b for a, b in zip(eq, row)), CycloScalar.rational(0))
            assert dot.is_zero()


def test_plane_needs_rank_two():
    with pytest.raises(DependentVectors):
        Plane([vec(1, 1), vec(1, 1)])


# ---------------------------------------------------------------------------
# branches


def test_branch_multiplicity_and_special_coords():
    b = curve_from_exponents([[4, [(6, 1), (9, 1)]]]).branches[0]
    assert b.m == 4
    assert b.special_coords == frozenset({0})
    assert b.conductor % b.m == 0


def test_branch_conductor_covers_coefficients():
    b = curve_from_exponents([[4, [(6, zeta(3)), (9, 1)]]]).branches[0]
    assert b.conductor % 12 == 0


def test_branch_rejects_shared_exponent_factor():
    from c5cone import NonPrimitiveParametrization

    with pytest.raises(NonPrimitiveParametrization):
        curve_from_exponents([[4, [(6, 1)]]])


def test_tangent_direction_collects_order_m_terms():
    c = curve_from_exponents([[[(1, 1)], [(1, 2)], [(1, 1)]]])
    assert tangent_direction(c.branches[0]).key() == ("1", "2", "1")
    c = curve_from_exponents([[[(4, 1)], [(3, 1)], [(5, 1)]]])
    assert tangent_direction(c.branches[0]).key() == ("0", "1", "0")


def test_curve_embeds_all_branches_in_one_conductor():
    c = curve_from_exponents(
        [[4, [(6, 1), (7, 1)]], [[(3, zeta(3)), (4, 1)], [(3, 1)]]]
    )
    assert c.conductor == 12
    assert all(b.conductor == 12 for b in c.branches)


def test_curve_rejects_mixed_dimensions():
    b1 = curve_from_exponents([[2, [(3, 1)]]]).branches[0]
    b2 = curve_from_exponents([[2, [(3, 1)], [(5, 1)]]]).branches[0]
    with pytest.raises(DimensionMismatch):
        curve([b1, Branch(b2.param, label="c")])


# ---------------------------------------------------------------------------
# classification and compatibility


def test_classification_of_mixed_curve(load):
    c = load("four_branches")
    cls = classify(c)
    labels = [b.label for b in c.branches]
    assert [labels[i] for i in sorted(cls.S)] == ["b1", "b2", "b4"]
    assert [(labels[i], labels[j]) for i, j in sorted(cls.T)] == [("b1", "b2")]
    assert [(labels[i], labels[j]) for i, j in sorted(cls.NT)] == [
        ("b1", "b3"), ("b1", "b4"), ("b2", "b3"), ("b2", "b4"), ("b3", "b4"),
    ]


def test_smooth_single_branch_classification(load):
    cls = classify(load("smooth_space"))
    assert cls.S == frozenset() and cls.T == frozenset() and cls.NT == frozenset()


def test_compatibility_picks_common_special_coordinate(load):
    assert check_compatibility(load("four_branches")) == {(0, 1): 0}


def test_incompatible_tangent_pair_is_rejected():
    c = curve_from_exponents(
        [
            [[(2, 1)], [(2, 2), (3, 1)], [(5, 1)]],
            [[(2, Fraction(1, 2)), (7, 1)], [(2, 1)], [(7, 1)]],
        ]
    )
    with pytest.raises(IncompatibleSystem) as exc:
        check_compatibility(c)
    assert exc.value.pair == ("b1", "b2")


def test_equal_image_branches_are_rejected():
    c = curve_from_exponents([[4, [(6, 1), (7, 1)]], [4, [(6, 1), (7, 1)]]])
    with pytest.raises(DuplicateBranch):
        c5_cone(c)
