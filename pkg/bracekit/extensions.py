# bracekit/extensions.py
"""
Extensions 0 -> I -> E -> H -> 0 of a brace H by a trivial brace I.

Responsibilities:
- Extension: E with the embedding, the projection and an st-section;
  validation of the short exact sequence.
- build_extension / extract_cocycle: the two directions between 2-cocycles
  and extensions (carrier of a built extension: (h, y) -> h * |I| + y).
- Equivalence of extensions via a linear solve for theta, with a
  brute-force search kept as oracle.
- classify_extensions: one extension per class of H2_N.
- Central extensions and additive splitting.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .actions import ActionPair, actions_from_extension, module_brace
from .algebra import FgAbelianGroup, Vector, decompose_abelian
from .brace import BraceMorphism, BraceSubset, FiniteBrace, classify_subset, invert_perm
from .cohomology import (
    Cochain,
    Cocycle2,
    additive_coboundary_map,
    brace_complex,
    c2_failures,
    coboundary_witness,
    cocycle_report,
    h2,
    require_good_pair,
)
from .config import settings
from .errors import MismatchedEnds, NotACocycle, NotAnIdeal, NotInC2N, OracleMismatch, OrderTooLarge
from .models import AxiomFailure, EquivalenceReport, ValidationReport

logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Extension
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Extension:
    E: FiniteBrace
    H: FiniteBrace
    I: FgAbelianGroup
    iota: BraceMorphism
    pi: BraceMorphism
    section: Tuple[int, ...]
    name: Optional[str] = field(default=None, compare=False)

    @classmethod
    def checked(
        cls,
        E: FiniteBrace,
        H: FiniteBrace,
        I: FgAbelianGroup,
        iota: BraceMorphism,
        pi: BraceMorphism,
        section: Optional[Sequence[int]] = None,
        name: Optional[str] = None,
    ) -> "Extension":
        """Validate and build; without a section the least one is chosen."""
        if section is None:
            section = least_section(pi, H)
        report = validate_extension(E, H, I, iota, pi, section)
        if not report.valid:
            first = report.failures[0]
            if first.axiom == "ideal":
                raise NotAnIdeal("the image of I is not an ideal of E", tuple(first.witness))
            raise MismatchedEnds(f"not an extension: {first.axiom}", tuple(first.witness))
        return cls(E, H, I, iota, pi, tuple(section), name)

    def label(self) -> str:
        return self.name or f"extension of {self.H.label()} by {self.I.label()}"

    @cached_property
    def ideal(self) -> BraceSubset:
        return classify_subset(self.E, self.iota.table)

    @cached_property
    def iota_inverse(self) -> Dict[int, int]:
        return {e: y for y, e in enumerate(self.iota.table)}

    def element(self, h: int, y: int) -> int:
        """s(h) + iota(y)."""
        return self.E.plus(self.section[h], self.iota(y))

    def decompose(self, e: int) -> Tuple[int, int]:
        """(h, y) with e = s(h) + iota(y)."""
        h = self.pi(e)
        return h, self.iota_inverse[self.E.minus(e, self.section[h])]

    def with_section(self, section: Sequence[int]) -> "Extension":
        report = validate_extension(self.E, self.H, self.I, self.iota, self.pi, section)
        if not report.valid:
            first = report.failures[0]
            raise MismatchedEnds(f"not an st-section: {first.axiom}", tuple(first.witness))
        return replace(self, section=tuple(section))

    def perturbed(self, theta: Cochain) -> "Extension":
        """The same extension with the section s + iota(theta)."""
        return self.with_section(tuple(self.element(h, theta(h)) for h in self.H.elements))


def least_section(pi: BraceMorphism, H: FiniteBrace) -> Tuple[int, ...]:
    section = [-1] * H.order
    for e in pi.source.elements:
        h = pi(e)
        if section[h] < 0:
            section[h] = e
    return tuple(section)


def validate_extension(
    E: FiniteBrace,
    H: FiniteBrace,
    I: FgAbelianGroup,
    iota: BraceMorphism,
    pi: BraceMorphism,
    section: Sequence[int],
) -> ValidationReport:
    failures: List[AxiomFailure] = []
    if iota.source.order != I.order or iota.target != E or pi.source != E or pi.target != H:
        failures.append(AxiomFailure(axiom="ends", detail="iota: I -> E and pi: E -> H expected"))
        return ValidationReport.from_failures("extension", failures)

    for label, morphism in (("iota", iota), ("pi", pi)):
        for failure in morphism.failures():
            failures.append(AxiomFailure(axiom=f"{label}_{failure.axiom}", witness=failure.witness))
    if len(set(iota.table)) != I.order:
        failures.append(AxiomFailure(axiom="iota_injective"))
    missing = sorted(set(H.elements) - set(pi.table))
    if missing:
        failures.append(AxiomFailure(axiom="pi_surjective", witness=missing[:1]))

    kernel = {e for e in E.elements if pi(e) == 0}
    if kernel != set(iota.table):
        odd = sorted(kernel.symmetric_difference(iota.table))
        failures.append(AxiomFailure(axiom="exact", witness=odd[:1], detail="image of iota != kernel of pi"))
    elif not classify_subset(E, iota.table).is_ideal:
        failures.append(AxiomFailure(axiom="ideal", witness=sorted(iota.table)))

    if len(section) != H.order:
        failures.append(AxiomFailure(axiom="section", witness=[len(section)]))
    else:
        if section[0] != 0:
            failures.append(AxiomFailure(axiom="section_zero", witness=[0]))
        bad = next((h for h in H.elements if not 0 <= section[h] < E.order or pi(section[h]) != h), None)
        if bad is not None:
            failures.append(AxiomFailure(axiom="section", witness=[bad]))
    return ValidationReport.from_failures("extension", failures)


def image_brace(E: FiniteBrace, proj: Sequence[int], name: Optional[str] = None) -> FiniteBrace:
    """The brace on {0, ..., max(proj)} for which proj is a morphism."""
    size = max(proj) + 1
    representative = [-1] * size
    for e, h in enumerate(proj):
        if representative[h] < 0:
            representative[h] = e
    if min(representative) < 0:
        raise MismatchedEnds("the projection is not onto {0, ..., max}", (representative.index(-1),))
    add = [[proj[E.plus(a, b)] for b in representative] for a in representative]
    circ = [[proj[E.comp(a, b)] for b in representative] for a in representative]
    return FiniteBrace.from_tables(add, circ, name=name)


def extension_from_parts(
    E: FiniteBrace,
    ideal: Sequence[int],
    proj: Sequence[int],
    section: Optional[Sequence[int]] = None,
    H: Optional[FiniteBrace] = None,
    invariant_factors: Optional[Sequence[int]] = None,
    name: Optional[str] = None,
) -> Extension:
    """
    An extension from file data. Without invariant factors the module is
    recovered from the addition table of the ideal, listed with 0 first.
    """
    if len(proj) != E.order:
        raise MismatchedEnds(f"proj lists {len(proj)} images for {E.order} elements", (len(proj),))
    if H is None:
        H = image_brace(E, proj, name=f"{E.label()}/I")
    pi = BraceMorphism(E, H, tuple(proj))

    if invariant_factors is not None:
        I = FgAbelianGroup.of(invariant_factors)
        iota_table = tuple(ideal)
    else:
        members = list(ideal)
        position = {e: k for k, e in enumerate(members)}
        if len(position) != len(members) or any(
            E.plus(a, b) not in position for a in members for b in members
        ):
            raise NotAnIdeal("the listed ideal is not closed under +", tuple(members))
        table = [[position[E.plus(a, b)] for b in members] for a in members]
        I, iso = decompose_abelian(table)
        back = invert_perm(iso)
        iota_table = tuple(members[back[y]] for y in range(I.order))
    if len(iota_table) != I.order:
        raise MismatchedEnds(f"{len(iota_table)} ideal elements for a module of order {I.order}")
    iota = BraceMorphism(module_brace(I), E, iota_table)
    return Extension.checked(E, H, I, iota, pi, section, name)


# -----------------------------------------------------------------------------
# Cocycles <-> extensions
# -----------------------------------------------------------------------------
def build_extension(A: ActionPair, c: Cocycle2, name: Optional[str] = None) -> Extension:
    """
    E = H x I with
      (h1, y1) + (h2, y2) = (h1 + h2, y1 + y2 + beta(h1, h2))
      (h1, y1) o (h2, y2) = (h1 o h2, nu_{h1 o h2} sigma_{h2} nu^-1_{h1}(y1) + nu_{h1}(y2) + tau(h1, h2))
    """
    require_good_pair(A)
    failures = c2_failures(c)
    if failures:
        raise NotInC2N(f"(beta, tau) fails {failures[0].axiom}", tuple(failures[0].witness))
    report = cocycle_report(c)
    if not report.valid:
        first = report.failures[0]
        raise NotACocycle(f"(beta, tau) fails {first.axiom}", tuple(first.witness))

    H, I, nu, sigma, nu_inv = A.H, A.I, A.nu, A.sigma, A.nu_inv
    m = I.order
    carrier = [(h, y) for h in H.elements for y in range(m)]

    def add(p: Tuple[int, int], q: Tuple[int, int]) -> int:
        (h1, y1), (h2, y2) = p, q
        y = I.plus(I.plus(y1, y2), c.beta(h1, h2))
        return H.plus(h1, h2) * m + y

    def comp(p: Tuple[int, int], q: Tuple[int, int]) -> int:
        (h1, y1), (h2, y2) = p, q
        h = H.comp(h1, h2)
        y = I.plus(I.plus(nu[h][sigma[h2][nu_inv[h1][y1]]], nu[h1][y2]), c.tau(h1, h2))
        return h * m + y

    E = FiniteBrace.from_tables(
        [[add(p, q) for q in carrier] for p in carrier],
        [[comp(p, q) for q in carrier] for p in carrier],
        name=name,
    )
    iota = BraceMorphism(module_brace(I), E, tuple(range(m)))
    pi = BraceMorphism(E, H, tuple(h for h, _ in carrier))
    section = tuple(h * m for h in H.elements)
    logger.debug("built an extension of order %d", E.order)
    return Extension(E, H, I, iota, pi, section, name)


def extract_cocycle(X: Extension) -> Tuple[ActionPair, Cocycle2]:
    """
    beta(h1, h2) = s(h1) + s(h2) - s(h1 + h2), tau(h1, h2) = s(h1) o s(h2) - s(h1 o h2).
    """
    A = actions_from_extension(X)
    E, H, s = X.E, X.H, X.section
    back = X.iota_inverse
    beta = Cochain.from_function(
        H, X.I, 2, lambda a, b: back[E.minus(E.plus(s[a], s[b]), s[H.plus(a, b)])], (0, 2)
    )
    tau = Cochain.from_function(
        H, X.I, 2, lambda a, b: back[E.minus(E.comp(s[a], s[b]), s[H.comp(a, b)])], (1, 1)
    )
    return A, Cocycle2(beta, tau, A)


def all_sections(X: Extension) -> List[Tuple[int, ...]]:
    """Every st-section of X; bounded by MAX_BRUTE_FORCE."""
    size = X.I.order ** (X.H.order - 1)
    if size > settings.MAX_BRUTE_FORCE:
        raise OrderTooLarge(f"{size} sections exceed {settings.MAX_BRUTE_FORCE}", (size,))
    fibres = [[0]] + [[e for e in X.E.elements if X.pi(e) == h] for h in range(1, X.H.order)]
    return [tuple(choice) for choice in product(*fibres)]


# -----------------------------------------------------------------------------
# Equivalence
# -----------------------------------------------------------------------------
def _morphism_for(X1: Extension, X2: Extension, theta: Cochain) -> BraceMorphism:
    """phi(s1(h) + iota1(y)) = s2(h) + iota2(theta(h)) + iota2(y)."""
    table = []
    for e in X1.E.elements:
        h, y = X1.decompose(e)
        table.append(X2.E.plus(X2.element(h, theta(h)), X2.iota(y)))
    return BraceMorphism(X1.E, X2.E, tuple(table))


def _check_same_ends(X1: Extension, X2: Extension) -> None:
    if X1.H != X2.H or X1.I.moduli != X2.I.moduli:
        raise MismatchedEnds("extensions of different H or I")


def equivalence_report(X1: Extension, X2: Extension, *, oracle: bool = False) -> EquivalenceReport:
    _check_same_ends(X1, X2)
    A1, c1 = extract_cocycle(X1)
    A2, c2 = extract_cocycle(X2)
    if A1 != A2:
        return EquivalenceReport(equivalent=False, reason="different action pairs", oracle_checked=oracle)

    theta = coboundary_witness(c1, c2)
    if oracle:
        found = oracle_equivalence(X1, X2)
        if (found is None) != (theta is None):
            raise OracleMismatch("linear solve and theta enumeration disagree on equivalence")
    if theta is None:
        return EquivalenceReport(
            equivalent=False, reason="the cocycles are not cohomologous", oracle_checked=oracle
        )
    morphism = _morphism_for(X1, X2, theta)
    if not morphism.is_valid():
        raise OracleMismatch("the equivalence built from theta is not a brace morphism", tuple(morphism.table))
    return EquivalenceReport(
        equivalent=True,
        reason="c1 - c2 = d1(theta)",
        morphism=list(morphism.table),
        theta=[list(theta.value(h)) for h in X1.H.elements],
        oracle_checked=oracle,
    )


def are_equivalent(X1: Extension, X2: Extension) -> Optional[BraceMorphism]:
    """An equivalence E1 -> E2 over the identities of I and H, or None."""
    report = equivalence_report(X1, X2)
    if not report.equivalent:
        return None
    return BraceMorphism(X1.E, X2.E, tuple(report.morphism or ()))


def oracle_equivalence(X1: Extension, X2: Extension) -> Optional[BraceMorphism]:
    """Try every normalized theta and keep the first map that is a brace morphism."""
    _check_same_ends(X1, X2)
    size = X1.I.order ** (X1.H.order - 1)
    if size > settings.MAX_BRUTE_FORCE:
        raise OrderTooLarge(f"{size} candidates exceed {settings.MAX_BRUTE_FORCE}", (size,))
    for values in product(range(X1.I.order), repeat=X1.H.order - 1):
        theta = Cochain(X1.H, X1.I, 1, (0,) + values, (0, 1))
        morphism = _morphism_for(X1, X2, theta)
        if morphism.is_valid():
            return morphism
    return None


# -----------------------------------------------------------------------------
# Classification
# -----------------------------------------------------------------------------
def classify_extensions(A: ActionPair) -> List[Tuple[Vector, Extension]]:
    """One extension per class of H2_N, with the class coordinates."""
    group = h2(A)
    classified = []
    for k, representative in enumerate(group.representatives()):
        coords = group.membership(representative)
        X = build_extension(A, representative, name=f"{A.H.label()} by {A.I.label()} #{k}")
        classified.append((coords, X))
    logger.info("%d extension classes for %s", len(classified), A.label())
    return classified


def is_central_extension(X: Extension) -> bool:
    return X.ideal.is_central


def splits_additively(X: Extension) -> Optional[Tuple[int, ...]]:
    """An additive st-section, found by solving d1(theta)_beta = -beta."""
    A, c = extract_cocycle(X)
    cx = brace_complex(A)
    beta_vector = cx.cocycle_to_vector(c)[: len(cx.pairs) * A.I.rank]
    additive = additive_coboundary_map(A)
    solution = additive.solve(additive.target.neg(beta_vector))
    if solution is None:
        return None
    theta = cx.vector_to_cochain1(solution)
    return tuple(X.element(h, theta(h)) for h in X.H.elements)


def oracle_additive_section(X: Extension) -> Optional[Tuple[int, ...]]:
    E, H = X.E, X.H
    for section in all_sections(X):
        if all(
            E.plus(section[a], section[b]) == section[H.plus(a, b)]
            for a in H.elements
            for b in H.elements
        ):
            return section
    return None
