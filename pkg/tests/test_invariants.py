"""Bi-Lipschitz invariants: exponents, intersection numbers, equivalence."""

import math
import random

import pytest

from c5cone import (
    NonIntegralResult,
    NotPlaneCurve,
    StructureMismatch,
    TooManyBranches,
    bilipschitz_equivalent,
    cham,
    characteristic_exponents,
    coam,
    contact_structure,
    curve_from_exponents,
    intersection_multiplicity,
    profile,
)
from random_curves import random_plane_branch_curve


# ---------------------------------------------------------------------------
# characteristic exponents


def test_characteristic_exponents_of_plane_branch():
    c = curve_from_exponents([[4, [(6, 1), (7, 1)]]])
    assert characteristic_exponents(c.branches[0]) == (4, 6, 7)


def test_characteristic_exponents_skip_non_essential_terms():
    c = curve_from_exponents([[4, [(6, 1), (8, 2), (9, 1), (11, 5)]]])
    assert characteristic_exponents(c.branches[0]) == (4, 6, 9)


def test_characteristic_exponents_need_a_plane_curve():
    c = curve_from_exponents([[4, [(6, 1)], [(7, 1)]]])
    with pytest.raises(NotPlaneCurve):
        characteristic_exponents(c.branches[0])


def test_characteristic_exponents_match_cham():
    rng = random.Random(13)
    for _ in range(30):
        b = random_plane_branch_curve(rng).branches[0]
        assert frozenset(characteristic_exponents(b)) == cham(b)


# ---------------------------------------------------------------------------
# intersection multiplicity


def test_intersection_multiplicity_divides_the_sum():
    assert intersection_multiplicity((6, 6, 7), 1, 1) == 19
    assert intersection_multiplicity((6, 7, 7), 1, 1) == 20
    assert intersection_multiplicity((6, 6, 7, 7), 1, 1) == 26


def test_intersection_multiplicity_scales_by_reduced_multiplicities(load):
    c = load("contact_structure_pair")
    seq = coam(c.branches[0], c.branches[1], 0)
    assert sum(seq) == 1152
    assert intersection_multiplicity(seq, 3, 2) == 192


def test_intersection_multiplicity_rejects_non_integral():
    with pytest.raises(NonIntegralResult):
        intersection_multiplicity((5,), 2, 3)


# ---------------------------------------------------------------------------
# contact structure


def test_contact_structure_of_scaled_pair(load):
    c = load("contact_structure_pair")
    b1, b2 = c.branches
    assert sorted(cham(b1)) == [8, 12, 22, 23]
    assert sorted(cham(b2)) == [12, 18, 33, 34]
    seq = coam(b1, b2, 0)
    assert len(seq) == math.lcm(b1.m, b2.m) == 24
    cs = contact_structure(b1, b2, seq)
    assert cs.tau == 2
    assert cs.betas == (36, 66)
    assert cs.E == (24, 12, 6)
    assert cs.q == 1
    assert cs.delta == 60
    assert cs.counts == {36: 12, 60: 12}


def test_contact_structure_rejects_wrong_counts(load):
    c = load("contact_structure_pair")
    b1, b2 = c.branches
    with pytest.raises(StructureMismatch):
        contact_structure(b1, b2, (36,) * 11 + (60,) * 13)


def test_contact_structure_rejects_alien_values(load):
    c = load("contact_structure_pair")
    b1, b2 = c.branches
    with pytest.raises(StructureMismatch):
        contact_structure(b1, b2, (35,) * 12 + (60,) * 12)


def test_contact_structure_accepts_every_fixture_pair(load):
    c = load("contact_structure_pair")
    b1, b2 = c.branches
    cs = contact_structure(b1, b2, coam(b1, b2, 0))
    assert sum(cs.counts.values()) == 24


# ---------------------------------------------------------------------------
# profiles and equivalence


def test_profile_shape(load):
    p = profile(load("four_branches"))
    assert p.r == 4
    assert p.chams[0] == frozenset({4, 6, 9})
    assert set(p.coams) == {(i, j) for i in range(4) for j in range(i + 1, 4)}
    assert p.coams[(0, 1)] == (18,) * 12
    assert p.coams[(2, 3)] == (3, 3, 3)
    assert p.tangent[(0, 1)] is True
    assert p.tangent[(2, 3)] is False


def test_equivalence_of_matching_tangent_pairs(load):
    verdict = bilipschitz_equivalent(load("tangent_pair_a"), load("tangent_pair_b"))
    assert verdict.equivalent
    assert verdict.witness == (0, 1)


def test_equivalence_is_reflexive(load):
    for name in ("four_branches", "space_cusp", "same_order_contact"):
        c = load(name)
        verdict = bilipschitz_equivalent(c, c)
        assert verdict.equivalent
        assert verdict.witness == tuple(range(len(c.branches)))


def test_equivalence_across_ambient_dimensions(load):
    plane = curve_from_exponents([[4, [(6, 1), (7, 1)]]])
    verdict = bilipschitz_equivalent(plane, load("space_cusp"))
    assert verdict.equivalent


def test_multiplicity_profile_does_not_see_plane_count(load):
    verdict = bilipschitz_equivalent(load("m16_one_plane"), load("m16_two_planes"))
    assert verdict.equivalent
    assert verdict.witness == (0,)


def test_non_equivalent_curves(load):
    assert not bilipschitz_equivalent(
        load("smooth_plane"), load("space_cusp")
    ).equivalent
    assert not bilipschitz_equivalent(
        load("four_branches"), load("space_cusp")
    ).equivalent


def test_fiber_pair_is_equivalent(load):
    verdict = bilipschitz_equivalent(load("family_fiber_0"), load("family_fiber_1"))
    assert verdict.equivalent
    assert verdict.witness == (0,)


def test_branch_count_cap():
    lines = curve_from_exponents([[1, [(1, k)]] for k in range(13)])
    with pytest.raises(TooManyBranches):
        bilipschitz_equivalent(lines, lines)
