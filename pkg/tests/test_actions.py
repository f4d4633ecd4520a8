"""Action pairs: validation, the good-pair condition, twisting and enumeration."""

from __future__ import annotations

import pytest

from bracekit import catalog
from bracekit.actions import (
    ActionPair,
    additive_automorphisms,
    enumerate_action_pairs,
    enumerate_good_pairs,
    is_compatible_pair,
    is_good_pair,
    module_brace,
    restrict_actions,
    twist_module,
    verify_action_pair,
)
from bracekit.brace import BraceMorphism, FiniteBrace, sub_brace
from bracekit.errors import InvalidActionPair, NotAnAutomorphism


def test_amended_pair_tables(amended):
    assert amended.nu == ((0, 1, 2, 3), (0, 3, 2, 1))
    assert amended.sigma == ((0, 1, 2, 3), (0, 1, 3, 2))
    assert amended.nu_sigma[1] == (0, 3, 1, 2)
    assert verify_action_pair(amended).valid
    assert is_good_pair(amended) == (True, None)


def test_literal_pair_fails_identity():
    literal = catalog.worked_literal_pair()
    assert literal.nu[0] == (0, 3, 2, 1)
    assert literal.nu[1] == (2, 1, 0, 3)
    assert literal.sigma == ((0, 1, 3, 2), (1, 0, 2, 3))
    report = verify_action_pair(literal)
    assert not report.valid
    assert report.failures[0].axiom == "nu_identity"
    assert report.failures[0].witness == [0]
    with pytest.raises(InvalidActionPair):
        is_good_pair(literal)


def test_inversion_pair_is_not_good():
    pair = catalog.z3_inversion_pair()
    assert pair.nu[1] == (0, 2, 1)
    assert verify_action_pair(pair).valid
    assert is_good_pair(pair) == (False, (1, 1, 1))


def test_sigma_must_reverse_products():
    H = FiniteBrace.trivial(3)
    I = catalog.module("Z2xZ2")
    rotate = (0, 2, 3, 1)
    square = (0, 3, 1, 2)
    ident = (0, 1, 2, 3)
    # sigma_2 should be sigma_1 sigma_1
    bad = ActionPair(H, I, (ident, rotate, square), (ident, rotate, rotate))
    report = verify_action_pair(bad)
    assert report.failed_axioms() == ["sigma_antihomomorphism"]


def test_non_additive_action_is_reported():
    H, I = FiniteBrace.trivial(2), catalog.module("Z2xZ2")
    ident = (0, 1, 2, 3)
    swap = (1, 0, 2, 3)
    report = verify_action_pair(ActionPair(H, I, (ident, swap), (ident, ident)))
    assert "nu_additive" in report.failed_axioms()


def test_additive_automorphisms():
    assert len(additive_automorphisms(catalog.module("Z2xZ2"))) == 6
    assert additive_automorphisms(catalog.module("Z3")) == ((0, 1, 2), (0, 2, 1))
    assert module_brace(catalog.module("Z4")).is_trivial()


def test_twist_module(amended):
    H = amended.H
    identity = BraceMorphism.identity(H)
    assert twist_module(amended, identity) == amended
    with pytest.raises(NotAnAutomorphism):
        twist_module(amended, BraceMorphism(H, H, (0, 0)))


def test_restrict_actions_to_sylow_subbrace():
    A = catalog.z6_trivial_pair()
    K, inclusion = sub_brace(A.H, [0, 3])
    restricted = restrict_actions(A, inclusion)
    assert restricted.H == K
    assert restricted.is_trivial()


def test_compatible_pairs_of_amended_actions(amended):
    Hid = BraceMorphism.identity(amended.H)
    Ib = module_brace(amended.I)
    commuting = [
        theta
        for theta in additive_automorphisms(amended.I)
        if is_compatible_pair(Hid, BraceMorphism(Ib, Ib, theta), amended, amended)
    ]
    # theta must commute with nu_1 and sigma_1
    assert commuting == [(0, 1, 2, 3)]


def test_every_theta_is_compatible_with_trivial_actions(trivial_pair):
    Hid = BraceMorphism.identity(trivial_pair.H)
    Ib = module_brace(trivial_pair.I)
    assert all(
        is_compatible_pair(Hid, BraceMorphism(Ib, Ib, theta), trivial_pair, trivial_pair)
        for theta in additive_automorphisms(trivial_pair.I)
    )


def test_enumerate_pairs():
    H = FiniteBrace.trivial(2)
    assert len(enumerate_action_pairs(H, catalog.module("Z2xZ2"))) == 16
    assert len(enumerate_good_pairs(H, catalog.module("Z2xZ2"))) == 16
    assert len(enumerate_action_pairs(H, catalog.module("Z3"))) == 4
    good = enumerate_good_pairs(H, catalog.module("Z3"))
    assert len(good) == 2
    assert all(A.nu == A.sigma for A in good)
