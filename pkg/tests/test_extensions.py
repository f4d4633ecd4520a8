"""Extensions: construction, cocycle extraction, equivalence and classification."""

from __future__ import annotations

import pytest

from bracekit import catalog
from bracekit.actions import actions_from_extension, enumerate_good_pairs
from bracekit.brace import BraceMorphism, verify_brace
from bracekit.cohomology import Cochain, Cocycle2, h2
from bracekit.config import settings
from bracekit.enumeration import enumerate_braces
from bracekit.errors import MismatchedEnds, NotACocycle, NotGoodPair, NotInC2N, OracleMismatch
from bracekit.extensions import (
    all_sections,
    are_equivalent,
    build_extension,
    classify_extensions,
    equivalence_report,
    extension_from_parts,
    extract_cocycle,
    is_central_extension,
    oracle_additive_section,
    oracle_equivalence,
    splits_additively,
)


def test_built_extension_is_a_brace(amended_extension):
    X = amended_extension
    assert X.E.order == 8
    assert verify_brace(X.E.add, X.E.circ).valid
    assert X.iota.table == (0, 1, 2, 3)
    assert X.pi.table == (0, 0, 0, 0, 1, 1, 1, 1)
    assert X.section == (0, 4)
    assert X.ideal.is_ideal
    assert X.decompose(X.element(1, 3)) == (1, 3)


def test_extract_recovers_actions_and_cocycle(amended, amended_cocycles):
    for c in amended_cocycles.values():
        X = build_extension(amended, c)
        A, recovered = extract_cocycle(X)
        assert A == amended
        assert recovered == c
        assert actions_from_extension(X) == amended


def test_build_rejects_bad_input(amended):
    with pytest.raises(NotACocycle):
        build_extension(amended, catalog.pair_cocycle(amended, 1, 0))
    with pytest.raises(NotInC2N):
        build_extension(amended, Cocycle2.from_values(amended, {(0, 1): (1, 0)}, {}))
    inversion = catalog.z3_inversion_pair()
    with pytest.raises(NotGoodPair):
        build_extension(inversion, Cocycle2.zero(inversion))


def test_sections(amended_extension):
    sections = all_sections(amended_extension)
    assert len(sections) == 4
    assert all(s[0] == 0 for s in sections)
    with pytest.raises(MismatchedEnds):
        amended_extension.with_section((0, 1))


def test_changing_the_section_keeps_the_class(amended, amended_extension):
    group = h2(amended)
    _, original = extract_cocycle(amended_extension)
    theta = Cochain.from_values(amended.H, amended.I, 1, {(1,): (1, 1)})
    _, moved = extract_cocycle(amended_extension.perturbed(theta))
    assert group.membership(moved) == group.membership(original)


# -----------------------------------------------------------------------------
# Equivalence
# -----------------------------------------------------------------------------
def test_equivalent_extensions(amended, amended_cocycles):
    X1 = build_extension(amended, amended_cocycles[(2, 0)])
    X2 = build_extension(amended, amended_cocycles[(2, 1)])
    report = equivalence_report(X1, X2, oracle=True)
    assert report.equivalent
    assert report.oracle_checked
    morphism = are_equivalent(X1, X2)
    assert morphism is not None
    assert morphism.is_valid() and morphism.is_bijective()
    assert all(morphism(X1.iota(y)) == X2.iota(y) for y in range(4))
    assert all(X2.pi(morphism(e)) == X1.pi(e) for e in X1.E.elements)
    assert oracle_equivalence(X1, X2) is not None


def test_equivalence_must_be_a_brace_morphism(monkeypatch, amended, amended_cocycles):
    import bracekit.extensions as extensions_module

    X1 = build_extension(amended, amended_cocycles[(2, 0)])
    X2 = build_extension(amended, amended_cocycles[(2, 1)])
    broken = BraceMorphism(X1.E, X2.E, (0, 0, 2, 3, 4, 5, 6, 7))
    assert not broken.is_valid()
    monkeypatch.setattr(extensions_module, "_morphism_for", lambda *_: broken)
    with pytest.raises(OracleMismatch):
        equivalence_report(X1, X2)


def test_inequivalent_extensions(amended, amended_cocycles):
    X1 = build_extension(amended, amended_cocycles[(0, 0)])
    X2 = build_extension(amended, amended_cocycles[(2, 0)])
    report = equivalence_report(X1, X2, oracle=True)
    assert not report.equivalent
    assert report.morphism is None
    assert are_equivalent(X1, X2) is None
    assert oracle_equivalence(X1, X2) is None


def test_different_actions_are_not_equivalent(amended_extension, split_extension):
    report = equivalence_report(amended_extension, split_extension)
    assert not report.equivalent
    assert report.reason == "different action pairs"


def test_mismatched_ends(amended_extension):
    A = catalog.z6_trivial_pair()
    other = build_extension(A, Cocycle2.zero(A))
    with pytest.raises(MismatchedEnds):
        equivalence_report(amended_extension, other)


# -----------------------------------------------------------------------------
# Classification and special extensions
# -----------------------------------------------------------------------------
def test_classification_counts(amended, trivial_pair):
    amended_classes = classify_extensions(amended)
    assert [coords for coords, _ in amended_classes] == [(0,), (1,)]
    assert len(classify_extensions(trivial_pair)) == 16


def test_classified_extensions_are_pairwise_inequivalent(amended):
    classes = classify_extensions(amended)
    (_, X0), (_, X1) = classes
    assert not equivalence_report(X0, X1).equivalent


def test_additive_splitting(amended, amended_cocycles, amended_extension, split_extension):
    assert splits_additively(amended_extension) is None
    assert oracle_additive_section(amended_extension) is None
    coboundary = build_extension(amended, amended_cocycles[(0, 1)])
    section = splits_additively(coboundary)
    assert section is not None
    E = coboundary.E
    assert E.plus(section[1], section[1]) == section[0]
    assert splits_additively(split_extension) == (0, 4)
    assert oracle_additive_section(split_extension) is not None


def test_central_extensions(amended_extension, split_extension):
    assert is_central_extension(split_extension)
    assert not is_central_extension(amended_extension)


def test_extension_from_parts(amended_extension):
    X = amended_extension
    rebuilt = extension_from_parts(
        X.E, list(X.iota.table), list(X.pi.table), section=list(X.section), H=X.H, invariant_factors=[2, 2]
    )
    assert rebuilt == X
    inferred = extension_from_parts(X.E, list(X.iota.table), list(X.pi.table))
    assert inferred.H.order == 2
    assert inferred.I.moduli == (2, 2)
    with pytest.raises(MismatchedEnds):
        extension_from_parts(X.E, list(X.iota.table), [0, 1])


# -----------------------------------------------------------------------------
# Classes and extensions correspond over every small good pair
# -----------------------------------------------------------------------------
@pytest.mark.parametrize("order", [1, 2, 3, 4])
@pytest.mark.parametrize("module", ["Z2", "Z3", "Z4", "Z2xZ2"])
def test_classes_round_trip_through_extensions(order, module):
    I = catalog.module(module)
    for H in enumerate_braces(order):
        for A in enumerate_good_pairs(H, I):
            group = h2(A)
            if group.order > settings.MAX_LISTED_CLASSES:
                continue
            classes = classify_extensions(A)
            assert len(classes) == group.order
            assert len({coords for coords, _ in classes}) == group.order
            for coords, X in classes:
                recovered, c = extract_cocycle(X)
                assert recovered == A
                assert group.membership(c) == coords
            if group.order <= 4:
                for k, (_, X1) in enumerate(classes):
                    for _, X2 in classes[k + 1:]:
                        assert are_equivalent(X1, X2) is None
