# bracekit/enumeration.py
"""
Braces of small order up to isomorphism.

A brace structure on an abelian group (A, +) is the same thing as a map
lambda: A -> Aut(A, +) with lambda_0 = id and
lambda_{a + lambda_a(b)} = lambda_a lambda_b; the product is then
a o b = a + lambda_a(b). We search those maps by backtracking for every
abelian group of order n and keep one brace per canonical form.
"""

from __future__ import annotations

import logging
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint
from sympy.utilities.iterables import partitions

from .algebra import FgAbelianGroup
from .brace import FiniteBrace, Perm, brace_automorphisms, compose_perms, identity_perm, invert_perm
from .config import settings
from .errors import IndexOutOfRange, OrderTooLarge

logger = logging.getLogger(__name__)

CanonicalKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def abelian_group_types(n: int) -> List[FgAbelianGroup]:
    """Every abelian group of order n, once, in invariant factor form."""
    per_prime = []
    for p, e in sorted(factorint(n).items()):
        options = [sorted(k for k, m in part.items() for _ in range(m)) for part in partitions(e)]
        per_prime.append((p, options))

    groups = []
    for choice in product(*(options for _, options in per_prime)):
        length = max((len(exps) for exps in choice), default=0)
        factors = [1] * length
        for (p, _), exps in zip(per_prime, choice):
            padded = [0] * (length - len(exps)) + list(exps)
            for i, e in enumerate(padded):
                factors[i] *= p ** e
        groups.append(FgAbelianGroup.of([d for d in factors if d > 1]))
    groups.sort(key=lambda g: g.moduli)
    return groups


def canonical_key(add: Sequence[Sequence[int]], circ: Sequence[Sequence[int]]) -> CanonicalKey:
    """Least (add, circ) pair of flattened tables over relabelings fixing 0."""
    n = len(add)
    best: Optional[CanonicalKey] = None
    for rest in permutations(range(1, n)):
        relabel = (0,) + rest
        back = invert_perm(relabel)
        key = (
            tuple(relabel[add[back[i]][back[j]]] for i in range(n) for j in range(n)),
            tuple(relabel[circ[back[i]][back[j]]] for i in range(n) for j in range(n)),
        )
        if best is None or key < best:
            best = key
    return best  # type: ignore[return-value]


def _lambda_maps(A: FiniteBrace, autos: Sequence[Perm]) -> List[List[Perm]]:
    n = A.order
    assignment: List[Optional[Perm]] = [None] * n
    assignment[0] = identity_perm(n)
    solutions: List[List[Perm]] = []

    def consistent() -> bool:
        assigned = [a for a in A.elements if assignment[a] is not None]
        for a in assigned:
            for b in assigned:
                c = A.plus(a, assignment[a][b])
                if assignment[c] is not None and assignment[c] != compose_perms(assignment[a], assignment[b]):
                    return False
        return True

    def extend(a: int) -> None:
        if a == n:
            solutions.append(list(assignment))  # type: ignore[arg-type]
            return
        for candidate in autos:
            assignment[a] = candidate
            if consistent():
                extend(a + 1)
        assignment[a] = None

    extend(1)
    return solutions


def enumerate_braces(n: int, bound: Optional[int] = None) -> List[FiniteBrace]:
    """
    Every brace of order n exactly once up to isomorphism, sorted by
    canonical form and named B{n}_{k}.
    """
    bound = bound or settings.MAX_ENUMERATION_ORDER
    if n < 1:
        raise IndexOutOfRange(f"order must be positive, got {n}", (n,))
    if n > bound:
        raise OrderTooLarge(f"enumeration of order {n} exceeds the bound {bound}", (n,))

    found: Dict[CanonicalKey, Tuple[Tuple[int, ...], ...]] = {}
    for group in abelian_group_types(n):
        A = FiniteBrace.trivial_on(group)
        autos = [f.table for f in brace_automorphisms(A, bound=max(n, settings.MAX_AUTOMORPHISM_ORDER))]
        for lam in _lambda_maps(A, autos):
            circ = tuple(tuple(A.plus(a, lam[a][b]) for b in A.elements) for a in A.elements)
            found.setdefault(canonical_key(A.add, circ), circ)

    braces = []
    for k, key in enumerate(sorted(found)):
        add_flat, circ_flat = key
        add = [list(add_flat[i * n:(i + 1) * n]) for i in range(n)]
        circ = [list(circ_flat[i * n:(i + 1) * n]) for i in range(n)]
        braces.append(FiniteBrace.from_tables(add, circ, name=f"B{n}_{k}", check=False))
    logger.info("found %d braces of order %d", len(braces), n)
    return braces
