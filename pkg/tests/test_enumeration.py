"""Small-order brace enumeration."""

from __future__ import annotations

from itertools import permutations, product

import pytest

from bracekit.brace import verify_brace
from bracekit.config import overridden
from bracekit.enumeration import abelian_group_types, canonical_key, enumerate_braces
from bracekit.errors import IndexOutOfRange, OrderTooLarge


def test_abelian_group_types():
    assert [g.moduli for g in abelian_group_types(1)] == [()]
    assert [g.moduli for g in abelian_group_types(8)] == [(2, 2, 2), (2, 4), (8,)]
    assert [g.moduli for g in abelian_group_types(12)] == [(2, 6), (12,)]


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 1), (4, 4), (5, 1), (6, 2)])
def test_brace_counts(n, count):
    braces = enumerate_braces(n)
    assert len(braces) == count
    assert [E.name for E in braces] == [f"B{n}_{k}" for k in range(count)]
    for E in braces:
        assert verify_brace(E.add, E.circ).valid


def test_enumeration_is_up_to_isomorphism():
    keys = [canonical_key(E.add, E.circ) for E in enumerate_braces(4)]
    assert len(set(keys)) == len(keys)
    assert sum(E.is_trivial() for E in enumerate_braces(4)) == 2


def test_canonical_key_ignores_relabelling():
    z4 = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    swap = (0, 2, 1, 3)
    relabelled = [[swap[z4[swap[a]][swap[b]]] for b in range(4)] for a in range(4)]
    assert canonical_key(z4, z4) == canonical_key(relabelled, relabelled)


def test_enumeration_bounds():
    with pytest.raises(OrderTooLarge):
        enumerate_braces(7)
    with pytest.raises(IndexOutOfRange):
        enumerate_braces(0)
    with overridden(MAX_ENUMERATION_ORDER=3):
        with pytest.raises(OrderTooLarge):
            enumerate_braces(4)


def _group_tables(n):
    """Every group table on 0..n-1 with identity 0, row by row."""
    rows = [[list(p) for p in permutations(range(n)) if p[0] == a] for a in range(n)]
    for choice in product(*rows[1:]):
        table = [list(range(n))] + list(choice)
        if any(len({table[a][b] for a in range(n)}) != n for b in range(n)):
            continue
        if all(table[table[a][b]][c] == table[a][table[b][c]] for a, b, c in product(range(n), repeat=3)):
            yield table


def _relabelled(table, relabel):
    n = len(table)
    moved = [[0] * n for _ in range(n)]
    for a, b in product(range(n), repeat=2):
        moved[relabel[a]][relabel[b]] = relabel[table[a][b]]
    return tuple(map(tuple, moved))


def _is_brace(add, circ):
    n = len(add)
    neg = [add[a].index(0) for a in range(n)]
    return all(
        circ[a][add[b][c]] == add[add[circ[a][b]][neg[a]]][circ[a][c]]
        for a, b, c in product(range(n), repeat=3)
    )


def test_order_four_count_by_brute_force():
    n = 4
    groups = list(_group_tables(n))
    assert len(groups) == 4
    abelian = [t for t in groups if all(t[a][b] == t[b][a] for a, b in product(range(n), repeat=2))]
    classes = set()
    for add in abelian:
        for circ in groups:
            if _is_brace(add, circ):
                relabellings = [(0,) + p for p in permutations(range(1, n))]
                classes.add(min((_relabelled(add, r), _relabelled(circ, r)) for r in relabellings))
    assert len(classes) == len(enumerate_braces(n)) == 4
