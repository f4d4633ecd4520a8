"""Compatible pairs, the Wells map and its exactness, inducibility and the Sylow reduction."""

from __future__ import annotations

import pytest

from bracekit import catalog
from bracekit.brace import BraceMorphism, FiniteBrace
from bracekit.cohomology import Cocycle2, h2, rh2
from bracekit.errors import (
    DoesNotNormalizeIdeal,
    NotAdditivelySplit,
    NotAutomorphisms,
    NotCompatible,
)
from bracekit.extensions import build_extension, classify_extensions, extension_from_parts, extract_cocycle
from bracekit.wells import (
    CompatiblePair,
    act_on_class,
    act_on_cocycle,
    act_on_ext_class,
    act_on_extension,
    autb_normalizing,
    compatible_pairs,
    eta_isomorphism,
    gamma_product,
    is_compatible,
    is_inducible,
    module_criterion,
    restrict_automorphism,
    semidirect_law_holds,
    sylow_reduction,
    wells_map,
    wells_report,
)

KLEIN_AUTOS = [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3), (0, 2, 3, 1), (0, 3, 1, 2), (0, 3, 2, 1)]


@pytest.fixture
def tau_extension(trivial_pair):
    """Trivial actions, beta = 0 and tau(1, 1) = (0, 1)."""
    return build_extension(trivial_pair, catalog.pair_cocycle(trivial_pair, 0, 1), name="tau (0, 1)")


# -----------------------------------------------------------------------------
# Compatible pairs
# -----------------------------------------------------------------------------
def test_compatible_pairs_with_trivial_actions(trivial_pair):
    pairs = compatible_pairs(trivial_pair)
    assert len(pairs) == 6
    assert [p.theta.table for p in pairs] == KLEIN_AUTOS
    assert pairs[0].is_identity()
    assert all(is_compatible(p, trivial_pair) for p in pairs)


def test_only_the_identity_preserves_the_amended_pair(amended):
    pairs = compatible_pairs(amended)
    assert len(pairs) == 1
    assert pairs[0] == CompatiblePair.identity(amended)


def test_pair_algebra(trivial_pair):
    p = CompatiblePair.from_tables(trivial_pair, (0, 1), (0, 2, 3, 1))
    q = CompatiblePair.from_tables(trivial_pair, (0, 1), (0, 3, 1, 2))
    assert (p * q).is_identity()
    assert p.inverse() == q
    assert p.entry().theta == [0, 2, 3, 1]


def test_pair_preconditions(amended):
    bad_theta = CompatiblePair.from_tables(amended, (0, 1), (0, 0, 0, 0))
    c = catalog.pair_cocycle(amended, 0, 0)
    with pytest.raises(NotAutomorphisms):
        act_on_cocycle(c, bad_theta)
    swap = CompatiblePair.from_tables(amended, (0, 1), (0, 2, 1, 3))
    with pytest.raises(NotCompatible):
        act_on_cocycle(c, swap)


# -----------------------------------------------------------------------------
# Actions of C on cocycles, classes and extensions
# -----------------------------------------------------------------------------
def test_action_on_cocycles(trivial_pair):
    c = catalog.pair_cocycle(trivial_pair, 2, 1)
    p = CompatiblePair.from_tables(trivial_pair, (0, 1), (0, 2, 1, 3))
    moved = act_on_cocycle(c, p)
    assert moved == catalog.pair_cocycle(trivial_pair, 1, 2)
    assert act_on_cocycle(c, CompatiblePair.identity(trivial_pair)) == c


def test_action_is_a_right_action(trivial_pair):
    group = h2(trivial_pair)
    pairs = compatible_pairs(trivial_pair)
    for x in group.structure.elements():
        for p in pairs:
            for q in pairs:
                assert act_on_class(group, x, p * q) == act_on_class(group, act_on_class(group, x, p), q)


def test_extension_action_matches_class_action(trivial_pair, tau_extension):
    group = h2(trivial_pair)
    _, c = extract_cocycle(tau_extension)
    for p in compatible_pairs(trivial_pair):
        assert act_on_ext_class(tau_extension, p) == act_on_class(group, group.membership(c), p)
        moved = act_on_extension(tau_extension, p)
        assert moved.E == tau_extension.E
        assert moved.iota.table == tuple(tau_extension.iota(p.theta(y)) for y in range(4))


def test_semidirect_law(trivial_pair, amended):
    assert semidirect_law_holds(h2(trivial_pair), compatible_pairs(trivial_pair))
    assert semidirect_law_holds(h2(amended), compatible_pairs(amended))


def test_gamma_product(trivial_pair):
    group = h2(trivial_pair)
    identity = CompatiblePair.identity(trivial_pair)
    x, y = group.structure.basis()[:2]
    pair, h = gamma_product(group, (identity, x), (identity, y))
    assert pair.is_identity()
    assert h == group.structure.add(x, y)


# -----------------------------------------------------------------------------
# The Wells map and exactness
# -----------------------------------------------------------------------------
def test_split_extension_is_fully_inducible(split_extension):
    report = wells_report(split_extension)
    assert report.inducible == list(range(6))
    assert report.restriction_image == list(range(6))
    assert report.autb_normalizing_order == 24
    assert report.autb_kernel_order == 4
    assert report.derivations_order == 4
    assert report.exact_at_kernel and report.exact_at_image
    assert report.derivation_law and report.omega_is_homomorphism
    assert report.eta_verified


def test_tau_extension_obstructions(tau_extension):
    data = wells_map(tau_extension)
    assert data.kernel() == [0, 1]
    assert data.derivation_law_holds()
    assert not data.is_homomorphism()
    report = wells_report(tau_extension)
    assert report.restriction_image == [0, 1]
    assert report.exact_at_image
    assert report.exact_at_kernel
    assert report.autb_normalizing_order == 8


def test_amended_extension_wells(amended_extension):
    report = wells_report(amended_extension)
    assert report.omega == [[0]]
    assert report.inducible == [0]
    assert report.restriction_image == [0]
    assert report.autb_kernel_order == 2
    assert report.exact_at_kernel and report.exact_at_image


def test_eta_isomorphism(amended_extension, split_extension):
    for X in (amended_extension, split_extension):
        eta = eta_isomorphism(X)
        assert eta.verify()
        _, kernel = autb_normalizing(X)
        assert sorted(g.table for g in kernel) == sorted(eta.eta(lam).table for lam in eta.derivations)


def test_restriction_needs_a_normalizing_automorphism(split_extension):
    E = split_extension.E
    swap = BraceMorphism(E, E, tuple(4 * ((e // 2) % 2) + 2 * (e // 4) + e % 2 for e in E.elements))
    assert swap.is_automorphism()
    with pytest.raises(DoesNotNormalizeIdeal):
        restrict_automorphism(split_extension, swap)


# -----------------------------------------------------------------------------
# Inducibility
# -----------------------------------------------------------------------------
def test_inducibility_three_ways(trivial_pair, tau_extension):
    pairs = compatible_pairs(trivial_pair)
    data = wells_map(tau_extension)

    fixing = is_inducible(tau_extension, pairs[1], data)
    assert fixing.inducible and fixing.direct_search
    assert fixing.module_criterion == [True, True]
    assert fixing.agree
    assert fixing.witness is not None
    assert fixing.obstruction is None

    moving = is_inducible(tau_extension, pairs[2], data)
    assert not moving.inducible and not moving.direct_search
    assert moving.module_criterion == [True, False]
    assert moving.agree
    assert moving.witness is None
    assert moving.obstruction is not None


def test_module_criterion_rejects_non_bimodule_maps(amended_extension, amended):
    swap = CompatiblePair.from_tables(amended, (0, 1), (0, 2, 1, 3))
    assert module_criterion(amended_extension, swap) == (False, False)
    with pytest.raises(NotCompatible):
        is_inducible(amended_extension, swap)


# -----------------------------------------------------------------------------
# Sylow reduction
# -----------------------------------------------------------------------------
def test_sylow_reduction_on_z6():
    A = catalog.z6_trivial_pair()
    classes = rh2(A).representatives()
    assert len(classes) == 2
    pairs = compatible_pairs(A)
    assert len(pairs) == 2
    for c in classes:
        X = build_extension(A, c)
        for p in pairs:
            report = sylow_reduction(X, p)
            assert [v.prime for v in report.primes] == [2, 3]
            assert all(v.square_commutes for v in report.primes)
            assert report.implication_holds


def test_sylow_reduction_of_the_split_extension():
    A = catalog.z6_trivial_pair()
    X = build_extension(A, Cocycle2.zero(A))
    for p in compatible_pairs(A):
        report = sylow_reduction(X, p)
        assert [v.sylow for v in report.primes] == [[0, 3], [0, 2, 4]]
        assert all(v.inducible and v.square_commutes for v in report.primes)
        assert report.global_inducible
        assert report.implication_holds and report.converse_holds


def test_sylow_reduction_needs_additive_splitting():
    A = catalog.z6_trivial_pair()
    E = FiniteBrace.trivial(12)
    X = extension_from_parts(E, [0, 6], [e % 6 for e in range(12)], H=A.H, invariant_factors=[2])
    with pytest.raises(NotAdditivelySplit):
        sylow_reduction(X, compatible_pairs(A)[0])


# -----------------------------------------------------------------------------
# Every classified extension of the worked pairs
# -----------------------------------------------------------------------------
@pytest.mark.parametrize("make", [catalog.worked_amended_pair, catalog.worked_trivial_pair])
def test_exactness_and_inducibility_on_every_class(make):
    A = make()
    for _, X in classify_extensions(A):
        report = wells_report(X)
        assert report.exact_at_kernel and report.exact_at_image
        assert report.derivation_law and report.eta_verified
        data = wells_map(X)
        for p in data.pairs:
            verdict = is_inducible(X, p, data)
            assert verdict.agree
            assert verdict.inducible == (data.index_of(p) in report.inducible)
