# bracekit/actions.py
"""
Pairs of actions of (H, o) on (I, +).

Responsibilities:
- ActionPair: nu (left action) and sigma (right action) stored as additive
  permutations of the element indices of I.
- verify_action_pair / is_good_pair with witnesses.
- Extraction of the pair from an extension, twists I_phi, restriction to a
  sub-brace, compatibility of (alpha, zeta) with two pairs.
- Exhaustive search of all (good) pairs for small H and I.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, Callable, List, Optional, Sequence, Tuple

from .algebra import FgAbelianGroup, Vector
from .brace import (
    BraceMorphism,
    FiniteBrace,
    Perm,
    brace_automorphisms,
    classify_subset,
    compose_perms,
    identity_perm,
    invert_perm,
)
from .config import settings
from .errors import IdealNotTrivialBrace, InvalidActionPair, NotAnAutomorphism, NotAnIdeal
from .models import AxiomFailure, ValidationReport

if TYPE_CHECKING:
    from .extensions import Extension

logger = logging.getLogger(__name__)

GoodPairWitness = Tuple[int, int, int]


@lru_cache(maxsize=None)
def module_brace(I: FgAbelianGroup) -> FiniteBrace:
    """I as a trivial brace on its element indices."""
    return FiniteBrace.trivial_on(I, name=I.label())


@lru_cache(maxsize=None)
def additive_automorphisms(I: FgAbelianGroup) -> Tuple[Perm, ...]:
    """Aut(I, +) as permutations of element indices, sorted."""
    bound = max(I.order, settings.MAX_AUTOMORPHISM_ORDER)
    return tuple(f.table for f in brace_automorphisms(module_brace(I), bound=bound))


def is_additive(I: FgAbelianGroup, perm: Sequence[int]) -> bool:
    return all(
        perm[I.plus(x, y)] == I.plus(perm[x], perm[y]) for x in range(I.order) for y in range(I.order)
    )


# -----------------------------------------------------------------------------
# ActionPair
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class ActionPair:
    H: FiniteBrace
    I: FgAbelianGroup
    nu: Tuple[Perm, ...]
    sigma: Tuple[Perm, ...]
    name: Optional[str] = field(default=None, compare=False)

    @classmethod
    def trivial(cls, H: FiniteBrace, I: FgAbelianGroup, name: Optional[str] = None) -> "ActionPair":
        ident = identity_perm(I.order)
        return cls(H, I, (ident,) * H.order, (ident,) * H.order, name=name)

    @classmethod
    def from_functions(
        cls,
        H: FiniteBrace,
        I: FgAbelianGroup,
        nu: Callable[[int, Vector], Sequence[int]],
        sigma: Callable[[int, Vector], Sequence[int]],
        name: Optional[str] = None,
    ) -> "ActionPair":
        """Build the tables from coordinate formulas nu(h, y), sigma(h, y)."""
        elements = list(I.elements())
        return cls(
            H,
            I,
            tuple(tuple(I.index_of(nu(h, y)) for y in elements) for h in H.elements),
            tuple(tuple(I.index_of(sigma(h, y)) for y in elements) for h in H.elements),
            name=name,
        )

    @cached_property
    def nu_inv(self) -> Tuple[Perm, ...]:
        return tuple(invert_perm(p) for p in self.nu)

    @cached_property
    def sigma_inv(self) -> Tuple[Perm, ...]:
        return tuple(invert_perm(p) for p in self.sigma)

    @cached_property
    def nu_sigma(self) -> Tuple[Perm, ...]:
        """nu_h sigma_h, the map appearing in the good-pair condition and in d0."""
        return tuple(compose_perms(n, s) for n, s in zip(self.nu, self.sigma))

    def is_trivial(self) -> bool:
        ident = identity_perm(self.I.order)
        return all(p == ident for p in self.nu) and all(p == ident for p in self.sigma)

    def label(self) -> str:
        return self.name or ("trivial actions" if self.is_trivial() else "actions")


# -----------------------------------------------------------------------------
# Validation
# -----------------------------------------------------------------------------
def verify_action_pair(A: ActionPair) -> ValidationReport:
    """
    nu a homomorphism and sigma an anti-homomorphism (H, o) -> Aut(I, +).
    """
    H, I = A.H, A.I
    failures: List[AxiomFailure] = []
    for label, table in (("nu", A.nu), ("sigma", A.sigma)):
        if len(table) != H.order:
            failures.append(AxiomFailure(axiom=f"{label}_shape", witness=[len(table)]))
            continue
        bad = next((h for h in H.elements if sorted(table[h]) != list(range(I.order))), None)
        if bad is not None:
            failures.append(AxiomFailure(axiom=f"{label}_bijective", witness=[bad]))
            continue
        if table[0] != identity_perm(I.order):
            failures.append(
                AxiomFailure(axiom=f"{label}_identity", witness=[0], detail=f"{label}_0 is not the identity")
            )
        additive = next(
            (
                (h, x, y)
                for h in H.elements
                for x in range(I.order)
                for y in range(I.order)
                if table[h][I.plus(x, y)] != I.plus(table[h][x], table[h][y])
            ),
            None,
        )
        if additive is not None:
            failures.append(AxiomFailure(axiom=f"{label}_additive", witness=list(additive)))

        def law(h1: int, h2: int) -> bool:
            left = table[H.comp(h1, h2)]
            if label == "nu":
                return left == compose_perms(table[h1], table[h2])
            return left == compose_perms(table[h2], table[h1])

        broken = next(((h1, h2) for h1 in H.elements for h2 in H.elements if not law(h1, h2)), None)
        if broken is not None:
            axiom = "nu_homomorphism" if label == "nu" else "sigma_antihomomorphism"
            failures.append(AxiomFailure(axiom=axiom, witness=list(broken)))
    return ValidationReport.from_failures("actions", failures)


def is_good_pair(A: ActionPair) -> Tuple[bool, Optional[GoodPairWitness]]:
    """
    nu_{h1+h2} sigma_{h1+h2}(y) + y = nu_{h1} sigma_{h1}(y) + nu_{h2} sigma_{h2}(y)
    for all h1, h2, y; returns the first failing (h1, h2, y).
    """
    report = verify_action_pair(A)
    if not report.valid:
        first = report.failures[0]
        raise InvalidActionPair(f"action pair fails {first.axiom}", tuple(first.witness))
    H, I, rho = A.H, A.I, A.nu_sigma
    for h1 in H.elements:
        for h2 in H.elements:
            s = H.plus(h1, h2)
            for y in range(I.order):
                if I.plus(rho[s][y], y) != I.plus(rho[h1][y], rho[h2][y]):
                    return False, (h1, h2, y)
    return True, None


# -----------------------------------------------------------------------------
# Constructions
# -----------------------------------------------------------------------------
def actions_from_extension(X: "Extension") -> ActionPair:
    """
    nu_h(y) = s(h) o y - s(h) and sigma_h(y) = s(h)^-1 o y o s(h).
    """
    E = X.E
    iota = X.iota.table
    back = {e: y for y, e in enumerate(iota)}
    members = list(iota)
    if any(E.comp(a, b) != E.plus(a, b) for a in members for b in members):
        raise IdealNotTrivialBrace("the image of I is not a trivial brace")
    if not classify_subset(E, members).is_ideal:
        raise NotAnIdeal("the image of I is not an ideal of E", tuple(sorted(members)))

    nu, sigma = [], []
    for h in X.H.elements:
        s = X.section[h]
        nu.append(tuple(back[E.minus(E.comp(s, e), s)] for e in members))
        sigma.append(tuple(back[E.comp(E.comp(E.inverse(s), e), s)] for e in members))
    return ActionPair(X.H, X.I, tuple(nu), tuple(sigma))


def twist_module(A: ActionPair, phi: BraceMorphism) -> ActionPair:
    """I_phi: nu'_h = nu_{phi(h)}, sigma'_h = sigma_{phi(h)}."""
    if phi.source != A.H or not phi.is_automorphism():
        raise NotAnAutomorphism("phi is not a brace automorphism of H", phi.table)
    return ActionPair(
        A.H,
        A.I,
        tuple(A.nu[phi(h)] for h in A.H.elements),
        tuple(A.sigma[phi(h)] for h in A.H.elements),
    )


def restrict_actions(A: ActionPair, inclusion: BraceMorphism) -> ActionPair:
    """(nu, sigma) along a sub-brace inclusion K -> H."""
    return ActionPair(
        inclusion.source,
        A.I,
        tuple(A.nu[inclusion(k)] for k in inclusion.source.elements),
        tuple(A.sigma[inclusion(k)] for k in inclusion.source.elements),
    )


def is_compatible_pair(
    alpha: BraceMorphism,
    zeta: BraceMorphism,
    A: ActionPair,
    A_prime: ActionPair,
) -> bool:
    """
    zeta(nu_{alpha(h')}(y)) = nu'_{h'}(zeta(y)) and the same for sigma,
    for alpha: H' -> H and zeta: I -> I'.
    """
    if alpha.source != A_prime.H or alpha.target != A.H:
        logger.debug("alpha does not run from H' to H")
        return False
    if zeta.source.order != A.I.order or zeta.target.order != A_prime.I.order:
        logger.debug("zeta does not run from I to I'")
        return False
    z = zeta.table
    for h in A_prime.H.elements:
        a = alpha(h)
        for y in range(A.I.order):
            if z[A.nu[a][y]] != A_prime.nu[h][z[y]]:
                return False
            if z[A.sigma[a][y]] != A_prime.sigma[h][z[y]]:
                return False
    return True


# -----------------------------------------------------------------------------
# Search
# -----------------------------------------------------------------------------
def _action_maps(H: FiniteBrace, autos: Sequence[Perm], *, anti: bool) -> List[Tuple[Perm, ...]]:
    n = H.order
    ident = autos[0] if autos else ()
    assignment: List[Optional[Perm]] = [None] * n
    assignment[0] = identity_perm(len(ident))
    results: List[Tuple[Perm, ...]] = []

    def product_of(a: int, b: int) -> Perm:
        if anti:
            return compose_perms(assignment[b], assignment[a])  # type: ignore[arg-type]
        return compose_perms(assignment[a], assignment[b])  # type: ignore[arg-type]

    def consistent() -> bool:
        assigned = [a for a in H.elements if assignment[a] is not None]
        for a in assigned:
            for b in assigned:
                c = H.comp(a, b)
                if assignment[c] is not None and assignment[c] != product_of(a, b):
                    return False
        return True

    def extend(a: int) -> None:
        if a == n:
            results.append(tuple(assignment))  # type: ignore[arg-type]
            return
        for candidate in autos:
            assignment[a] = candidate
            if consistent():
                extend(a + 1)
        assignment[a] = None

    extend(1)
    return results


def enumerate_action_pairs(H: FiniteBrace, I: FgAbelianGroup) -> List[ActionPair]:
    """Every (homomorphism, anti-homomorphism) pair (H, o) -> Aut(I, +)."""
    autos = additive_automorphisms(I)
    homs = _action_maps(H, autos, anti=False)
    antis = _action_maps(H, autos, anti=True)
    logger.debug("%d homomorphisms and %d anti-homomorphisms into Aut(%s)", len(homs), len(antis), I.label())
    return [ActionPair(H, I, nu, sigma) for nu in homs for sigma in antis]


def enumerate_good_pairs(H: FiniteBrace, I: FgAbelianGroup) -> List[ActionPair]:
    return [A for A in enumerate_action_pairs(H, I) if is_good_pair(A)[0]]
