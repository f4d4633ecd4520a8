"""Low-degree brace cohomology: differentials, Z1/H1, H2 and RH2, oracles."""

from __future__ import annotations

import pytest

from bracekit import catalog
from bracekit.actions import ActionPair, enumerate_good_pairs
from bracekit.brace import FiniteBrace
from bracekit.cohomology import (
    Cochain,
    Cocycle2,
    b2,
    brace_complex,
    coboundary_witness,
    cocycle_report,
    d0,
    d1,
    d2,
    fixed_subgroup,
    h1,
    h2,
    is_cocycle,
    oracle_b2,
    oracle_coboundary_witness,
    oracle_z1,
    oracle_z2,
    rh2,
    z1,
    z2,
)
from bracekit.config import overridden
from bracekit.enumeration import enumerate_braces
from bracekit.errors import (
    NotACocycle,
    NotGoodPair,
    NotInC2N,
    NotInFixedSubgroup,
    NotNormalized,
    OrderTooLarge,
)


# -----------------------------------------------------------------------------
# Differentials
# -----------------------------------------------------------------------------
def test_d1_of_the_nonfixed_direction(amended, amended_cocycles):
    theta = Cochain.from_values(amended.H, amended.I, 1, {(1,): (0, 1)})
    assert d1(theta, amended) == amended_cocycles[(0, 1)]


def test_d1_requires_normalized_theta(amended):
    theta = Cochain(amended.H, amended.I, 1, (1, 0))
    with pytest.raises(NotNormalized):
        d1(theta, amended)


def test_d0_on_fixed_points(amended):
    assert sorted(fixed_subgroup(amended).elements()) == [(0, 0), (1, 0)]
    assert d0((1, 0), amended).value(1) == (1, 1)
    assert d0((0, 0), amended).is_zero()
    with pytest.raises(NotInFixedSubgroup):
        d0((0, 1), amended)


def test_d1_d0_is_zero(amended):
    for y in fixed_subgroup(amended).elements():
        assert d1(d0(y, amended), amended).is_zero()


def test_d2_d1_is_zero(amended, trivial_pair):
    for A in (amended, trivial_pair):
        for values in range(A.I.order):
            theta = Cochain(A.H, A.I, 1, (0, values))
            assert all(part.is_zero() for part in d2(d1(theta, A)))


def test_d2_requires_c2n(amended):
    asymmetric = Cocycle2.from_values(amended, {(0, 1): (1, 0)}, {})
    with pytest.raises(NotInC2N):
        d2(asymmetric)
    assert not is_cocycle(asymmetric)


def test_cocycle_report(amended, amended_cocycles):
    for c in amended_cocycles.values():
        assert cocycle_report(c).valid
    stray = catalog.pair_cocycle(amended, 1, 0)
    report = cocycle_report(stray)
    assert not report.valid
    assert report.failures[0].axiom.startswith("d2_")


# -----------------------------------------------------------------------------
# The worked pair over H = Z/2, I = (Z/2)^2
# -----------------------------------------------------------------------------
def test_amended_h2_is_z2(amended):
    group = h2(amended)
    assert group.invariant_factors == (2,)
    assert group.cycles.order == 4
    assert group.boundaries.order == 2
    assert group.representative_vectors() == [(0, 0, 0, 0), (1, 0, 0, 0)]


def test_amended_cycles_and_boundaries(amended, amended_cocycles):
    cycles = z2(amended)
    assert sorted(cycles.vectors()) == sorted(
        brace_complex(amended).cocycle_to_vector(c) for c in amended_cocycles.values()
    )
    assert b2(amended).vectors() == [(0, 0, 0, 0), (0, 0, 0, 1)]


def test_amended_class_membership(amended, amended_cocycles):
    group = h2(amended)
    assert group.is_coboundary(amended_cocycles[(0, 1)])
    assert not group.is_coboundary(amended_cocycles[(2, 0)])
    assert group.cohomologous(amended_cocycles[(2, 0)], amended_cocycles[(2, 1)])
    assert group.membership(amended_cocycles[(0, 0)]) == (0,)
    assert group.membership(amended_cocycles[(2, 1)]) == (1,)
    with pytest.raises(NotACocycle):
        group.membership(catalog.pair_cocycle(amended, 1, 0))


def test_amended_degree_one(amended):
    assert z1(amended).order == 2
    assert h1(amended).order == 1
    derivations = z1(amended).elements()
    assert [theta.value(1) for theta in derivations] == [(0, 0), (1, 1)]


def test_amended_restricted_is_trivial(amended):
    assert rh2(amended).order == 1


def test_trivial_actions(trivial_pair):
    assert z1(trivial_pair).order == 4
    assert h1(trivial_pair).order == 4
    assert b2(trivial_pair).order == 1
    group = h2(trivial_pair)
    assert group.order == 16
    assert group.invariant_factors == (2, 2, 2, 2)
    assert rh2(trivial_pair).invariant_factors == (2, 2)


def test_report(amended):
    report = h2(amended).report()
    assert report.order == 2
    assert report.invariant_factors == [2]
    assert report.actions == "worked_amended"
    assert report.representatives == [[0, 0, 0, 0], [1, 0, 0, 0]]


def test_not_good_pair_is_rejected():
    with pytest.raises(NotGoodPair):
        h2(catalog.z3_inversion_pair())


def test_listing_bound(trivial_pair):
    with overridden(MAX_LISTED_CLASSES=8):
        with pytest.raises(OrderTooLarge):
            h2(trivial_pair).representatives()
        assert h2(trivial_pair).report().representatives == []


# -----------------------------------------------------------------------------
# Oracles
# -----------------------------------------------------------------------------
@pytest.mark.parametrize(
    "make",
    [
        catalog.worked_amended_pair,
        catalog.worked_trivial_pair,
        lambda: ActionPair.trivial(FiniteBrace.trivial(3), catalog.module("Z2")),
    ],
)
def test_linear_algebra_matches_enumeration(make):
    A = make()
    cx = brace_complex(A)
    assert sorted(cx.cochain1_to_vector(t) for t in oracle_z1(A)) == sorted(z1(A).vectors())
    assert oracle_b2(A) == sorted(b2(A).vectors())
    assert oracle_z2(A) == sorted(z2(A).vectors())


def test_degree_one_oracle_on_z6():
    A = catalog.z6_trivial_pair()
    cx = brace_complex(A)
    assert sorted(cx.cochain1_to_vector(t) for t in oracle_z1(A)) == sorted(z1(A).vectors())
    assert oracle_b2(A) == sorted(b2(A).vectors())
    with pytest.raises(OrderTooLarge):
        oracle_z2(A)


def test_coboundary_witness_agrees_with_search(amended, amended_cocycles):
    first, second = amended_cocycles[(2, 1)], amended_cocycles[(2, 0)]
    theta = coboundary_witness(first, second)
    assert theta is not None
    assert d1(theta, amended) == first - second
    assert oracle_coboundary_witness(first, second) is not None
    assert coboundary_witness(amended_cocycles[(2, 0)], amended_cocycles[(0, 0)]) is None
    assert oracle_coboundary_witness(amended_cocycles[(2, 0)], amended_cocycles[(0, 0)]) is None


def test_oracle_bound(trivial_pair):
    with overridden(MAX_BRUTE_FORCE=10):
        with pytest.raises(OrderTooLarge):
            oracle_z2(trivial_pair)


# -----------------------------------------------------------------------------
# Zero sequence over every small good pair
# -----------------------------------------------------------------------------
@pytest.mark.parametrize("order", [1, 2, 3, 4])
@pytest.mark.parametrize("module", ["Z1", "Z2", "Z3", "Z4", "Z2xZ2"])
def test_zero_sequence_on_every_good_pair(order, module):
    I = catalog.module(module)
    for H in enumerate_braces(order):
        for A in enumerate_good_pairs(H, I):
            for y in fixed_subgroup(A).elements():
                assert d1(d0(y, A), A).is_zero()
            # d1 and d2 are additive, so single-point cochains suffice
            for h in range(1, H.order):
                for value in range(1, I.order):
                    values = [0] * H.order
                    values[h] = value
                    theta = Cochain(H, I, 1, tuple(values))
                    assert all(part.is_zero() for part in d2(d1(theta, A)))
