# bracekit/wells.py
"""
Automorphisms of extensions and the Wells sequence

    1 -> Autb^{H,I}(E) -> Autb_I(E) --rho--> C_(nu,sigma) --omega--> H2_N(H, I)

Responsibilities:
- CompatiblePair and the stabilizer C_(nu,sigma) of the action pair.
- The right action of C_(nu,sigma) on cocycles, classes and extensions.
- The Wells derivation omega, the restriction rho, the kernel isomorphism
  eta: Z1_N -> Autb^{H,I}(E) and the exactness checks.
- Inducibility three ways (omega, direct search, bi-module criterion) and
  the reduction to Sylow left ideals.

Products of pairs are (phi1, theta1)(phi2, theta2) = (phi1 o phi2, theta1 o theta2);
cocycles transform as c^(phi, theta) = theta^-1 c(phi, phi).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .actions import (
    ActionPair,
    additive_automorphisms,
    is_compatible_pair,
    module_brace,
    twist_module,
)
from .algebra import Vector
from .brace import (
    BraceMorphism,
    brace_automorphisms,
    identity_perm,
    invert_perm,
    sub_brace,
    sylow_left_ideal,
    prime_divisors,
)
from .cohomology import Cochain, Cocycle2, CohomologyGroup, h2, require_good_pair, z1
from .errors import (
    DoesNotNormalizeIdeal,
    NotAdditivelySplit,
    NotAutomorphisms,
    NotCompatible,
    SylowNotPreserved,
)
from .extensions import Extension, extract_cocycle, splits_additively
from .models import (
    CompatiblePairEntry,
    InducibilityReport,
    PrimeVerdictEntry,
    SylowReport,
    WellsReport,
)

logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Compatible pairs
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class CompatiblePair:
    phi: BraceMorphism
    theta: BraceMorphism

    @classmethod
    def identity(cls, A: ActionPair) -> "CompatiblePair":
        return cls(BraceMorphism.identity(A.H), BraceMorphism.identity(module_brace(A.I)))

    @classmethod
    def from_tables(cls, A: ActionPair, phi: Sequence[int], theta: Sequence[int]) -> "CompatiblePair":
        return cls(
            BraceMorphism(A.H, A.H, tuple(phi)),
            BraceMorphism(module_brace(A.I), module_brace(A.I), tuple(theta)),
        )

    def __mul__(self, other: "CompatiblePair") -> "CompatiblePair":
        return CompatiblePair(self.phi.compose(other.phi), self.theta.compose(other.theta))

    def inverse(self) -> "CompatiblePair":
        return CompatiblePair(self.phi.inverse(), self.theta.inverse())

    def is_identity(self) -> bool:
        return self.phi.is_identity() and self.theta.is_identity()

    def entry(self) -> CompatiblePairEntry:
        return CompatiblePairEntry(phi=list(self.phi.table), theta=list(self.theta.table))


def is_compatible(p: CompatiblePair, A: ActionPair) -> bool:
    """nu_h = theta^-1 nu_{phi(h)} theta and the same for sigma."""
    nu, sigma, theta = A.nu, A.sigma, p.theta.table
    for h in A.H.elements:
        image = p.phi(h)
        for y in range(A.I.order):
            if theta[nu[h][y]] != nu[image][theta[y]] or theta[sigma[h][y]] != sigma[image][theta[y]]:
                return False
    return True


def _require_automorphisms(p: CompatiblePair, A: ActionPair) -> None:
    if not (p.phi.source == A.H and p.phi.is_automorphism()):
        raise NotAutomorphisms("phi is not a brace automorphism of H", p.phi.table)
    if not (p.theta.source.order == A.I.order and p.theta.is_automorphism()):
        raise NotAutomorphisms("theta is not an automorphism of I", p.theta.table)


def _require_compatible(p: CompatiblePair, A: ActionPair) -> None:
    _require_automorphisms(p, A)
    if not is_compatible(p, A):
        raise NotCompatible("(phi, theta) does not preserve the action pair", p.phi.table + p.theta.table)


def compatible_pairs(A: ActionPair) -> List[CompatiblePair]:
    """C_(nu,sigma), sorted by (phi, theta) tables; the identity comes first."""
    require_good_pair(A)
    autos_H = brace_automorphisms(A.H)
    autos_I = additive_automorphisms(A.I)
    pairs = [
        CompatiblePair.from_tables(A, phi.table, theta)
        for phi in autos_H
        for theta in autos_I
    ]
    found = [p for p in pairs if is_compatible(p, A)]
    found.sort(key=lambda p: (p.phi.table, p.theta.table))
    logger.info("C_(nu,sigma) has %d of %d pairs", len(found), len(pairs))
    return found


# -----------------------------------------------------------------------------
# Actions on cocycles, classes and extensions
# -----------------------------------------------------------------------------
def _transform(f: Cochain, phi: Sequence[int], theta_inv: Sequence[int]) -> Cochain:
    return Cochain.from_function(
        f.H, f.I, f.arity, lambda *args: theta_inv[f(*(phi[a] for a in args))], f.bidegree
    )


def act_on_cocycle(c: Cocycle2, p: CompatiblePair) -> Cocycle2:
    """c^(phi, theta) = theta^-1 c(phi, phi), on both components."""
    _require_compatible(p, c.actions)
    theta_inv = invert_perm(p.theta.table)
    return Cocycle2(
        _transform(c.beta, p.phi.table, theta_inv),
        _transform(c.tau, p.phi.table, theta_inv),
        c.actions,
    )


def act_on_class(group: CohomologyGroup, coords: Sequence[int], p: CompatiblePair) -> Vector:
    """The class of a transformed representative."""
    return group.membership(act_on_cocycle(group.representative(coords), p))


def act_on_extension(X: Extension, p: CompatiblePair) -> Extension:
    """0 -> I --iota theta--> E --phi^-1 pi--> H -> 0, with section h -> s(phi(h))."""
    A = ActionPair.trivial(X.H, X.I)
    _require_automorphisms(p, A)
    phi_inv = invert_perm(p.phi.table)
    iota = BraceMorphism(X.iota.source, X.E, tuple(X.iota(p.theta(y)) for y in range(X.I.order)))
    pi = BraceMorphism(X.E, X.H, tuple(phi_inv[X.pi(e)] for e in X.E.elements))
    section = tuple(X.section[p.phi(h)] for h in X.H.elements)
    return Extension(X.E, X.H, X.I, iota, pi, section, X.name)


def act_on_ext_class(X: Extension, p: CompatiblePair) -> Vector:
    """[X^p] as H2_N coordinates, through the transformed extension."""
    A, c = extract_cocycle(X)
    _require_compatible(p, A)
    _, c_p = extract_cocycle(act_on_extension(X, p))
    return h2(A).membership(Cocycle2(c_p.beta, c_p.tau, A))


def gamma_product(
    group: CohomologyGroup,
    first: Tuple[CompatiblePair, Vector],
    second: Tuple[CompatiblePair, Vector],
) -> Tuple[CompatiblePair, Vector]:
    """(c1, h1)(c2, h2) = (c1 c2, h1^c2 + h2) in C_(nu,sigma) x| H2_N."""
    (p1, h1), (p2, h2_) = first, second
    return p1 * p2, group.structure.add(act_on_class(group, h1, p2), h2_)


def act_on_class_translate(group: CohomologyGroup, coords: Sequence[int], h: Sequence[int]) -> Vector:
    """The translation action of H2_N on itself."""
    return group.structure.add(coords, h)


def semidirect_law_holds(group: CohomologyGroup, pairs: Sequence[CompatiblePair]) -> bool:
    """([x]^h)^c = ([x]^c)^(h^c) for every class x, translation h and pair c."""
    classes = list(group.structure.elements())
    for p in pairs:
        moved = {x: act_on_class(group, x, p) for x in classes}
        for x in classes:
            for h in classes:
                if moved[act_on_class_translate(group, x, h)] != act_on_class_translate(group, moved[x], moved[h]):
                    return False
    return True


# -----------------------------------------------------------------------------
# The Wells map
# -----------------------------------------------------------------------------
@dataclass
class WellsData:
    extension: Extension
    actions: ActionPair
    cocycle: Cocycle2
    group: CohomologyGroup
    pairs: List[CompatiblePair]
    multiplication: List[List[int]]
    omega: List[Vector]

    def index_of(self, p: CompatiblePair) -> int:
        return self.pairs.index(p)

    def omega_of(self, p: CompatiblePair) -> Vector:
        return self.omega[self.index_of(p)]

    def kernel(self) -> List[int]:
        zero = self.group.structure.zero()
        return [i for i, w in enumerate(self.omega) if w == zero]

    def derivation_law_holds(self) -> bool:
        """omega(c1 c2) = omega(c1)^c2 + omega(c2) for all pairs."""
        add = self.group.structure.add
        for i, p1 in enumerate(self.pairs):
            for j, p2 in enumerate(self.pairs):
                left = self.omega[self.multiplication[i][j]]
                right = add(act_on_class(self.group, self.omega[i], p2), self.omega[j])
                if left != right:
                    logger.warning("derivation law fails at pairs %d, %d", i, j)
                    return False
        return True

    def is_homomorphism(self) -> bool:
        add = self.group.structure.add
        return all(
            self.omega[self.multiplication[i][j]] == add(self.omega[i], self.omega[j])
            for i in range(len(self.pairs))
            for j in range(len(self.pairs))
        )


def wells_map(X: Extension) -> WellsData:
    """omega(p) = [c^p - c] for every p in C_(nu,sigma)."""
    A, c = extract_cocycle(X)
    require_good_pair(A)
    group = h2(A)
    pairs = compatible_pairs(A)
    position: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {
        (p.phi.table, p.theta.table): k for k, p in enumerate(pairs)
    }
    multiplication = []
    for p1 in pairs:
        row = []
        for p2 in pairs:
            q = p1 * p2
            row.append(position[(q.phi.table, q.theta.table)])
        multiplication.append(row)

    base = group.membership(c)
    omega = [group.structure.sub(group.membership(act_on_cocycle(c, p)), base) for p in pairs]
    return WellsData(X, A, c, group, pairs, multiplication, omega)


# -----------------------------------------------------------------------------
# Autb_I(E), rho and eta
# -----------------------------------------------------------------------------
def _normalizes(X: Extension, gamma: BraceMorphism) -> bool:
    return {gamma(e) for e in X.iota.table} == set(X.iota.table)


def restrict_automorphism(X: Extension, gamma: BraceMorphism) -> CompatiblePair:
    """rho(gamma) = (h -> pi(gamma(s(h))), iota^-1 gamma iota)."""
    if not _normalizes(X, gamma):
        raise DoesNotNormalizeIdeal("gamma does not map iota(I) onto itself", gamma.table)
    phi = tuple(X.pi(gamma(X.section[h])) for h in X.H.elements)
    theta = tuple(X.iota_inverse[gamma(X.iota(y))] for y in range(X.I.order))
    return CompatiblePair(
        BraceMorphism(X.H, X.H, phi),
        BraceMorphism(module_brace(X.I), module_brace(X.I), theta),
    )


def autb_normalizing(X: Extension) -> Tuple[List[BraceMorphism], List[BraceMorphism]]:
    """(Autb_I(E), Autb^{H,I}(E)), each sorted by table."""
    normalizing = [gamma for gamma in brace_automorphisms(X.E) if _normalizes(X, gamma)]
    kernel = [gamma for gamma in normalizing if restrict_automorphism(X, gamma).is_identity()]
    logger.info("Autb_I(E) has order %d, its kernel %d", len(normalizing), len(kernel))
    return normalizing, kernel


@dataclass
class EtaIsomorphism:
    """eta(lambda)(s(h) + y) = s(h) + lambda(h) + y and its inverse zeta."""
    extension: Extension
    actions: ActionPair

    def eta(self, lam: Cochain) -> BraceMorphism:
        X, I = self.extension, self.extension.I
        table = []
        for e in X.E.elements:
            h, y = X.decompose(e)
            table.append(X.element(h, I.plus(lam(h), y)))
        return BraceMorphism(X.E, X.E, tuple(table))

    def zeta(self, gamma: BraceMorphism) -> Cochain:
        X = self.extension
        return Cochain.from_function(
            X.H,
            X.I,
            1,
            lambda h: X.iota_inverse[X.E.minus(gamma(X.section[h]), X.section[h])],
            (0, 1),
        )

    @cached_property
    def derivations(self) -> List[Cochain]:
        return z1(self.actions).elements()

    def verify(self, kernel: Optional[List[BraceMorphism]] = None) -> bool:
        """Element-by-element: eta lands in the kernel, is additive, and zeta inverts it."""
        if kernel is None:
            kernel = autb_normalizing(self.extension)[1]
        images = {}
        for lam in self.derivations:
            gamma = self.eta(lam)
            if gamma not in kernel or self.zeta(gamma) != lam:
                return False
            images[lam.values] = gamma
        for lam1 in self.derivations:
            for lam2 in self.derivations:
                if images[(lam1 + lam2).values] != images[lam1.values].compose(images[lam2.values]):
                    return False
        return all(self.eta(self.zeta(gamma)) == gamma for gamma in kernel)


def eta_isomorphism(X: Extension) -> EtaIsomorphism:
    A, _ = extract_cocycle(X)
    return EtaIsomorphism(X, A)


# -----------------------------------------------------------------------------
# Inducibility
# -----------------------------------------------------------------------------
def module_criterion(X: Extension, p: CompatiblePair) -> Tuple[bool, bool]:
    """
    (i) theta: I -> I_phi is a bi-module isomorphism;
    (ii) c(phi, phi) and theta c differ by a coboundary of I_phi.
    """
    A, c = extract_cocycle(X)
    _require_automorphisms(p, A)
    twisted = twist_module(A, p.phi)
    bimodule_iso = is_compatible_pair(BraceMorphism.identity(A.H), p.theta, A, twisted)
    if not bimodule_iso:
        return False, False
    ident_H, ident_I = identity_perm(A.H.order), identity_perm(A.I.order)
    pulled = Cocycle2(
        _transform(c.beta, p.phi.table, ident_I), _transform(c.tau, p.phi.table, ident_I), twisted
    )
    pushed = Cocycle2(
        _transform(c.beta, ident_H, p.theta.table), _transform(c.tau, ident_H, p.theta.table), twisted
    )
    return True, h2(twisted).is_coboundary(pulled - pushed)


def is_inducible(X: Extension, p: CompatiblePair, data: Optional[WellsData] = None) -> InducibilityReport:
    A, _ = extract_cocycle(X)
    _require_compatible(p, A)
    data = data or wells_map(X)
    omega = data.omega_of(p)
    omega_zero = not any(omega)

    normalizing, _ = autb_normalizing(X)
    witness = next((g for g in normalizing if restrict_automorphism(X, g) == p), None)
    criterion = list(module_criterion(X, p))

    direct = witness is not None
    agree = omega_zero == direct == all(criterion)
    if not agree:
        logger.warning("inducibility routes disagree: omega=%s direct=%s module=%s", omega_zero, direct, criterion)
    return InducibilityReport(
        pair=p.entry(),
        inducible=omega_zero,
        omega_zero=omega_zero,
        direct_search=direct,
        module_criterion=criterion,
        agree=agree,
        witness=list(witness.table) if witness is not None else None,
        obstruction=None if omega_zero else list(omega),
    )


# -----------------------------------------------------------------------------
# Sylow reduction
# -----------------------------------------------------------------------------
def restrict_extension(X: Extension, P: Sequence[int]) -> Tuple[Extension, BraceMorphism]:
    """0 -> I -> pi^-1(P) -> P -> 0 with the restricted section, and the inclusion of P."""
    K, inclusion = sub_brace(X.H, P, name=f"{X.H.label()}|P")
    position_H = {h: k for k, h in enumerate(inclusion.table)}
    R = [e for e in X.E.elements if X.pi(e) in position_H]
    ER, inclusion_R = sub_brace(X.E, R)
    position_E = {e: k for k, e in enumerate(inclusion_R.table)}
    iota = BraceMorphism(X.iota.source, ER, tuple(position_E[X.iota(y)] for y in range(X.I.order)))
    pi = BraceMorphism(ER, K, tuple(position_H[X.pi(e)] for e in inclusion_R.table))
    section = tuple(position_E[X.section[h]] for h in inclusion.table)
    return Extension.checked(ER, K, X.I, iota, pi, section, name=f"{X.label()}|P"), inclusion


def restrict_pair(p: CompatiblePair, inclusion: BraceMorphism, A_sub: ActionPair) -> CompatiblePair:
    position = {h: k for k, h in enumerate(inclusion.table)}
    phi = tuple(position[p.phi(h)] for h in inclusion.table)
    return CompatiblePair.from_tables(A_sub, phi, p.theta.table)


def sylow_reduction(X: Extension, p: CompatiblePair) -> SylowReport:
    section = splits_additively(X)
    if section is None:
        raise NotAdditivelySplit("the extension has no additive st-section")
    X = X.with_section(section)
    data = wells_map(X)
    _require_compatible(p, data.actions)

    verdicts = []
    for q in prime_divisors(X.H.order):
        P = sylow_left_ideal(X.H, q)
        if {p.phi(h) for h in P.elements} != set(P.elements):
            raise SylowNotPreserved(f"phi does not preserve the Sylow {q}-left ideal", P.elements)
        X_q, inclusion = restrict_extension(X, P.elements)
        data_q = wells_map(X_q)

        def restricted_class(pair: CompatiblePair) -> Vector:
            diff = act_on_cocycle(data.cocycle, pair) - data.cocycle
            beta = Cochain.from_function(
                X_q.H, X.I, 2, lambda a, b: diff.beta(inclusion(a), inclusion(b)), (0, 2)
            )
            tau = Cochain.from_function(
                X_q.H, X.I, 2, lambda a, b: diff.tau(inclusion(a), inclusion(b)), (1, 1)
            )
            return data_q.group.membership(Cocycle2(beta, tau, data_q.actions))

        commutes = all(
            restricted_class(pair) == data_q.omega_of(restrict_pair(pair, inclusion, data_q.actions))
            for pair in data.pairs
            if {pair.phi(h) for h in P.elements} == set(P.elements)
        )
        inducible_q = not any(data_q.omega_of(restrict_pair(p, inclusion, data_q.actions)))
        verdicts.append(
            PrimeVerdictEntry(prime=q, sylow=list(P.elements), inducible=inducible_q, square_commutes=commutes)
        )

    global_inducible = not any(data.omega_of(p))
    all_primes = all(v.inducible for v in verdicts)
    converse = (not global_inducible) or all_primes
    if not converse:
        logger.warning("globally inducible pair fails at some prime: %s", p.entry())
    return SylowReport(
        pair=p.entry(),
        primes=verdicts,
        global_inducible=global_inducible,
        implication_holds=(not all_primes) or global_inducible,
        converse_holds=converse,
    )


# -----------------------------------------------------------------------------
# Report
# -----------------------------------------------------------------------------
def wells_report(X: Extension) -> WellsReport:
    data = wells_map(X)
    normalizing, kernel = autb_normalizing(X)
    image = sorted({data.index_of(restrict_automorphism(X, g)) for g in normalizing})
    inducible = data.kernel()
    eta = EtaIsomorphism(X, data.actions)
    eta_ok = eta.verify(kernel)
    return WellsReport(
        extension=X.label(),
        compatible_pairs=[p.entry() for p in data.pairs],
        multiplication=data.multiplication,
        omega=[list(w) for w in data.omega],
        inducible=inducible,
        restriction_image=image,
        autb_normalizing_order=len(normalizing),
        autb_kernel_order=len(kernel),
        derivations_order=len(eta.derivations),
        exact_at_kernel=eta_ok and len(kernel) == len(eta.derivations),
        exact_at_image=image == inducible,
        derivation_law=data.derivation_law_holds(),
        omega_is_homomorphism=data.is_homomorphism(),
        eta_verified=eta_ok,
    )
