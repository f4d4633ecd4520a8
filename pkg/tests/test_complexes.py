"""The general complexes: faces, the differential, group cocycles, functoriality."""

from __future__ import annotations

from itertools import product

import pytest

from bracekit import catalog
from bracekit.actions import is_additive, is_compatible_pair, module_brace
from bracekit.brace import BraceMorphism, classify_subset, sylow_left_ideal
from bracekit.cohomology import Cochain, all_tuples
from bracekit.complexes import (
    check_face_identity,
    face,
    general_differential,
    group_coboundary,
    group_cohomologous,
    is_group_cocycle,
    is_in_rc,
    is_in_rc_normalized,
    pushforward,
    restrict_cochain,
    to_group_cocycle,
)
from bracekit.errors import DimensionMismatch, IncompatiblePair, NotACocycle, NotALeftIdeal


def _cochains(A, arity, limit=None):
    size = A.H.order ** arity
    for k, values in enumerate(product(range(A.I.order), repeat=size)):
        if limit is not None and k >= limit:
            return
        yield Cochain(A.H, A.I, arity, values)


def _tau(A, coords):
    return Cochain.from_values(A.H, A.I, 2, {(1, 1): coords}, (1, 1))


# -----------------------------------------------------------------------------
# Faces
# -----------------------------------------------------------------------------
@pytest.mark.parametrize("arity", [1, 2])
def test_face_identities(amended, arity):
    for f in _cochains(amended, arity, limit=40):
        for j in range(arity + 2):
            for i in range(j + 1):
                assert check_face_identity(f, amended, i, j)


def test_face_bounds(amended):
    f = Cochain.zero(amended.H, amended.I, 1)
    with pytest.raises(DimensionMismatch):
        face(f, 3, amended)
    with pytest.raises(DimensionMismatch):
        check_face_identity(f, amended, 2, 1)


def test_outer_faces(amended):
    f = Cochain.from_values(amended.H, amended.I, 1, {(1,): (0, 1)})
    first = face(f, 0, amended)
    last = face(f, 2, amended)
    # nu_1 (0, 1) = (1, 1)
    assert first.value(1, 1) == (1, 1)
    # nu_0 sigma_1 nu_1^-1 (0, 1) = sigma_1 (1, 1) = (1, 0)
    assert last.value(1, 1) == (1, 0)


@pytest.mark.parametrize("arity", [1, 2])
def test_differential_squares_to_zero(amended, arity):
    for f in _cochains(amended, arity, limit=64):
        assert general_differential(general_differential(f, amended), amended).is_zero()


# -----------------------------------------------------------------------------
# RC and the group embedding
# -----------------------------------------------------------------------------
def test_rc_membership():
    A = catalog.z6_trivial_pair()
    parity = Cochain.from_function(A.H, A.I, 1, lambda h: h % 2)
    spike = Cochain.from_function(A.H, A.I, 1, lambda h: int(h == 1))
    assert is_in_rc(parity)
    assert is_in_rc_normalized(parity)
    assert not is_in_rc(spike)
    offset = Cochain.from_function(A.H, A.I, 2, lambda a, b: 1)
    assert not is_in_rc_normalized(offset)


def test_restricted_cocycles_embed_into_group_cocycles(amended):
    for coords in ((0, 0), (0, 1)):
        image = to_group_cocycle(_tau(amended, coords), amended)
        assert is_group_cocycle(image, amended)
    with pytest.raises(NotACocycle):
        to_group_cocycle(_tau(amended, (1, 0)), amended)


def test_brace_coboundary_stays_a_group_coboundary(amended):
    image = to_group_cocycle(_tau(amended, (0, 1)), amended)
    zero = Cochain.zero(amended.H, amended.I, 2)
    c = group_cohomologous(image, zero, amended)
    assert c is not None
    assert group_coboundary(c, amended) == image


def test_trivial_actions_embed_injectively(trivial_pair):
    zero = Cochain.zero(trivial_pair.H, trivial_pair.I, 2)
    classes = []
    for y in range(1, trivial_pair.I.order):
        image = to_group_cocycle(_tau(trivial_pair, trivial_pair.I.coords_of(y)), trivial_pair)
        assert is_group_cocycle(image, trivial_pair)
        assert group_cohomologous(image, zero, trivial_pair) is None
        classes.append(image)
    for first, second in product(classes, repeat=2):
        if first != second:
            assert group_cohomologous(first, second, trivial_pair) is None


# -----------------------------------------------------------------------------
# Functoriality
# -----------------------------------------------------------------------------
def test_pushforward_along_a_module_automorphism(trivial_pair):
    Ib = module_brace(trivial_pair.I)
    alpha = BraceMorphism.identity(trivial_pair.H)
    zeta = BraceMorphism(Ib, Ib, (0, 2, 1, 3))
    f = Cochain.from_values(trivial_pair.H, trivial_pair.I, 2, {(1, 1): (0, 1)})
    pushed = pushforward(alpha, zeta, f, trivial_pair, trivial_pair)
    assert pushed.value(1, 1) == (1, 0)
    assert pushforward(alpha, BraceMorphism.identity(Ib), f, trivial_pair, trivial_pair) == f


def _module_endomorphisms(A):
    Ib = module_brace(A.I)
    for table in product(range(A.I.order), repeat=A.I.order):
        if table[0] == 0 and is_additive(A.I, table):
            yield BraceMorphism(Ib, Ib, table)


@pytest.mark.parametrize("arity", [1, 2])
def test_pushforward_commutes_with_the_differential(trivial_pair, arity):
    A = trivial_pair
    alphas = [BraceMorphism(A.H, A.H, table) for table in ((0, 0), (0, 1))]
    pairs = [
        (alpha, zeta)
        for alpha in alphas
        for zeta in _module_endomorphisms(A)
        if is_compatible_pair(alpha, zeta, A, A)
    ]
    assert len(pairs) == 32
    for f in _cochains(A, arity):
        d = general_differential(f, A)
        for alpha, zeta in pairs:
            assert pushforward(alpha, zeta, d, A, A) == general_differential(
                pushforward(alpha, zeta, f, A, A), A
            )


def test_pushforward_rejects_incompatible_pairs(amended):
    Ib = module_brace(amended.I)
    f = Cochain.zero(amended.H, amended.I, 2)
    with pytest.raises(IncompatiblePair):
        pushforward(BraceMorphism.identity(amended.H), BraceMorphism(Ib, Ib, (0, 2, 1, 3)), f, amended, amended)


def test_restriction_to_sylow_left_ideals():
    A = catalog.z6_trivial_pair()
    parity = Cochain.from_function(A.H, A.I, 1, lambda h: h % 2)
    assert restrict_cochain(parity, sylow_left_ideal(A.H, 2)).values == (0, 1)
    assert restrict_cochain(parity, sylow_left_ideal(A.H, 3)).values == (0, 0, 0)
    pairwise = Cochain.from_function(A.H, A.I, 2, lambda a, b: (a * b) % 2)
    restricted = restrict_cochain(pairwise, sylow_left_ideal(A.H, 2))
    assert [restricted(*args) for args in all_tuples(restricted.H, 2)] == [0, 0, 0, 1]
    with pytest.raises(NotALeftIdeal):
        restrict_cochain(parity, classify_subset(A.H, [0, 1]))
