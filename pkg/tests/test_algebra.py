"""Integer linear algebra: Smith normal form, subgroups, homomorphisms, tables."""

from __future__ import annotations

from itertools import permutations

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from bracekit.algebra import (
    AbelianHom,
    CoordinateSpace,
    FgAbelianGroup,
    IntMatrix,
    Subgroup,
    Subquotient,
    _smith,
    decompose_abelian,
    hom_kernel,
    quotient_invariants,
    smith_normal_form,
)
from bracekit.errors import DimensionMismatch, IdentityNotZero, NotAbelian, NotAGroup


def _s3_table():
    perms = list(permutations(range(3)))
    return [[perms.index(tuple(p[q[i]] for i in range(3))) for q in perms] for p in perms]


MATRICES = [
    [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
    [[1, 2], [3, 4], [5, 6]],
    [[0, 0], [0, 0]],
    [[6, 0], [0, 4]],
    [[2, 0, 0, 0], [0, 2, 2, 0], [0, 0, 0, 2]],
]


@pytest.mark.parametrize("rows", MATRICES)
def test_smith_normal_form_matches_sympy(rows):
    m = IntMatrix.from_rows(rows)
    s, u, v = smith_normal_form(m)
    assert s.is_diagonal()
    assert u @ m @ v == s
    diagonal = s.diagonal()
    assert all(x >= 0 for x in diagonal)
    nonzero = [x for x in diagonal if x]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    if len(rows) == len(rows[0]) and any(any(row) for row in rows):
        expected = sympy_snf(Matrix(rows), domain=ZZ)
        assert sorted(diagonal) == sorted(abs(expected[i, i]) for i in range(len(rows)))


EXPECTED_DIAGONALS = [(2, 6, 12), (1, 2), (0, 0), (2, 12), (2, 2, 2)]


@pytest.mark.parametrize("rows, expected", zip(MATRICES, EXPECTED_DIAGONALS))
def test_smith_transforms_are_unimodular(rows, expected):
    m, n = len(rows), len(rows[0])
    s, u, u_inv, v, v_inv = _smith(rows, m, n)
    assert tuple(s[i][i] for i in range(min(m, n))) == expected
    assert IntMatrix.from_rows(u) @ IntMatrix.from_rows(u_inv) == IntMatrix.identity(m)
    assert IntMatrix.from_rows(v) @ IntMatrix.from_rows(v_inv) == IntMatrix.identity(n)
    assert IntMatrix.from_rows(u) @ IntMatrix.from_rows(rows) @ IntMatrix.from_rows(v) == IntMatrix.from_rows(s)


def test_matrix_shape_is_checked():
    with pytest.raises(DimensionMismatch):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        IntMatrix.identity(2) @ IntMatrix.zeros(3, 1)


def test_invariant_factor_form_is_enforced():
    assert FgAbelianGroup.of([2, 4]).label() == "Z/2 x Z/4"
    assert FgAbelianGroup.of([]).label() == "0"
    with pytest.raises(DimensionMismatch):
        FgAbelianGroup.of([2, 3])
    with pytest.raises(DimensionMismatch):
        FgAbelianGroup.of([1])


def test_mixed_radix_indexing():
    group = FgAbelianGroup.of([2, 2])
    assert [group.index_of(v) for v in group.elements()] == [0, 1, 2, 3]
    assert group.coords_of(2) == (1, 0)
    assert group.plus(1, 3) == 2
    assert group.negate(3) == 3
    assert FgAbelianGroup.of([6]).element_order((4,)) == 3


def test_subgroup_membership_and_order():
    space = CoordinateSpace((4, 4))
    sub = Subgroup(space, [(2, 0), (0, 2)])
    assert sub.order == 4
    assert sub.contains((2, 2))
    assert not sub.contains((1, 0))
    assert sub.reduce((3, 1)) == (1, 1)
    assert sub.elements() == [(0, 0), (0, 2), (2, 0), (2, 2)]
    bigger = sub.join(Subgroup(space, [(1, 1)]))
    assert bigger.order == 8
    assert sub.is_subgroup_of(bigger)
    assert sub == Subgroup(space, [(2, 2), (0, 2)])


def test_subquotient_structure():
    space = CoordinateSpace((4, 2))
    upper = Subgroup.whole(space)
    lower = Subgroup(space, [(2, 0)])
    quotient = Subquotient(upper, lower)
    assert quotient.structure.moduli == (2, 2)
    for coords in quotient.structure.elements():
        assert quotient.coordinates(quotient.representative(coords)) == coords
    with pytest.raises(DimensionMismatch):
        Subquotient(lower, upper)


def test_homomorphism_kernel_image_and_solve():
    source = CoordinateSpace((4,))
    target = CoordinateSpace((2,))
    f = AbelianHom.from_function(source, target, lambda x: (x[0],))
    assert f.kernel().elements() == [(0,), (2,)]
    assert f.image().order == 2
    x = f.solve((1,))
    assert x is not None and f(x) == (1,)
    kernel, inclusion = hom_kernel(f)
    assert kernel.moduli == (2,)
    assert inclusion((1,)) == (2,)

    zero = AbelianHom.from_function(source, target, lambda x: (0,))
    assert zero.solve((1,)) is None


def test_quotient_invariants():
    group, projection = quotient_invariants([(2, 2)], CoordinateSpace((4, 4)))
    assert group.moduli == (2, 4)
    assert projection((2, 2)) == group.zero()


def test_decompose_klein_table():
    klein = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    group, iso = decompose_abelian(klein)
    assert group.moduli == (2, 2)
    assert sorted(iso) == [0, 1, 2, 3]
    for a in range(4):
        for b in range(4):
            assert iso[klein[a][b]] == group.plus(iso[a], iso[b])


def test_decompose_cyclic_table():
    z6 = [[(a + b) % 6 for b in range(6)] for a in range(6)]
    group, iso = decompose_abelian(z6)
    assert group.moduli == (6,)
    assert iso[0] == 0


@pytest.mark.parametrize(
    "table, error",
    [
        ([[0, 1, 2], [1, 2, 0], [2, 1, 0]], NotAGroup),
        ([[1, 0], [0, 1]], IdentityNotZero),
        (_s3_table(), NotAbelian),
    ],
)
def test_decompose_rejects_bad_tables(table, error):
    with pytest.raises(error):
        decompose_abelian(table)
