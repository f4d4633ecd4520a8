# bracekit/cohomology.py
"""
Low-degree brace cohomology with coefficients in a bi-module I.

Responsibilities:
- Cochain / Cocycle2 value tables over H^n (I-element indices).
- The shuffle-constrained complex C0_N -> C1_N -> C2_N -> C3_N with d0, d1, d2.
- Z1_N, B1_N, H1_N, Z2_N, B2_N, H2_N and the restricted group RH2_N as exact
  finite abelian groups, with least representatives and class membership.
- Brute-force oracles for Z1_N, Z2_N, B2_N and for coboundary witnesses.

Cochain vectors (used for all linear algebra) list the I-coordinates of the
values on nondegenerate tuples, tuples in lexicographic order. A 2-cochain
vector is the beta block followed by the tau block.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .actions import ActionPair, is_good_pair
from .algebra import AbelianHom, CoordinateSpace, FgAbelianGroup, Subgroup, Subquotient, Vector
from .brace import FiniteBrace
from .config import settings
from .errors import (
    DimensionMismatch,
    NotACocycle,
    NotGoodPair,
    NotInC2N,
    NotInFixedSubgroup,
    NotNormalized,
    OrderTooLarge,
)
from .models import AxiomFailure, CohomologyReport, ValidationReport

logger = logging.getLogger(__name__)

Args = Tuple[int, ...]


def all_tuples(H: FiniteBrace, n: int) -> List[Args]:
    return list(product(H.elements, repeat=n))


def nondegenerate_tuples(H: FiniteBrace, n: int) -> List[Args]:
    """Tuples with no coordinate equal to 0, in lexicographic order."""
    return list(product(range(1, H.order), repeat=n))


def signed_sum(I: FgAbelianGroup, plus: Sequence[int], minus: Sequence[int] = ()) -> int:
    total = 0
    for x in plus:
        total = I.plus(total, x)
    for x in minus:
        total = I.minus(total, x)
    return total


# -----------------------------------------------------------------------------
# Cochains
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Cochain:
    """
    f: H^arity -> I as a row-major table of I-element indices.
    """
    H: FiniteBrace
    I: FgAbelianGroup
    arity: int
    values: Tuple[int, ...]
    bidegree: Optional[Tuple[int, int]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.values) != self.H.order ** self.arity:
            raise DimensionMismatch(
                f"{len(self.values)} values for a {self.arity}-cochain on a brace of order {self.H.order}"
            )

    @classmethod
    def zero(cls, H: FiniteBrace, I: FgAbelianGroup, arity: int, bidegree: Optional[Tuple[int, int]] = None) -> "Cochain":
        return cls(H, I, arity, (0,) * (H.order ** arity), bidegree)

    @classmethod
    def from_function(
        cls,
        H: FiniteBrace,
        I: FgAbelianGroup,
        arity: int,
        fn: Callable[..., int],
        bidegree: Optional[Tuple[int, int]] = None,
    ) -> "Cochain":
        """fn(*args) returns an I-element index."""
        return cls(H, I, arity, tuple(fn(*args) for args in all_tuples(H, arity)), bidegree)

    @classmethod
    def from_values(
        cls,
        H: FiniteBrace,
        I: FgAbelianGroup,
        arity: int,
        entries: Mapping[Args, Sequence[int]],
        bidegree: Optional[Tuple[int, int]] = None,
    ) -> "Cochain":
        """Values given as I-coordinates; unlisted tuples are zero."""
        values = [0] * (H.order ** arity)
        for args, coords in entries.items():
            if len(args) != arity:
                raise DimensionMismatch(f"{len(args)} arguments for a {arity}-cochain", tuple(args))
            values[cls._position(H, tuple(H.check_index(a) for a in args))] = I.index_of(coords)
        return cls(H, I, arity, tuple(values), bidegree)

    @staticmethod
    def _position(H: FiniteBrace, args: Sequence[int]) -> int:
        position = 0
        for a in args:
            position = position * H.order + a
        return position

    def __call__(self, *args: int) -> int:
        return self.values[self._position(self.H, args)]

    def value(self, *args: int) -> Vector:
        return self.I.coords_of(self(*args))

    def _check_same_shape(self, other: "Cochain") -> None:
        if (self.H, self.I.moduli, self.arity) != (other.H, other.I.moduli, other.arity):
            raise DimensionMismatch("cochains on different domains")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_same_shape(other)
        return Cochain(
            self.H, self.I, self.arity,
            tuple(self.I.plus(x, y) for x, y in zip(self.values, other.values)), self.bidegree,
        )

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check_same_shape(other)
        return Cochain(
            self.H, self.I, self.arity,
            tuple(self.I.minus(x, y) for x, y in zip(self.values, other.values)), self.bidegree,
        )

    def __neg__(self) -> "Cochain":
        return Cochain(self.H, self.I, self.arity, tuple(self.I.negate(x) for x in self.values), self.bidegree)

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_normalized(self) -> bool:
        """Zero on every tuple with a coordinate equal to 0."""
        return all(self(*args) == 0 for args in all_tuples(self.H, self.arity) if 0 in args)

    def entries(self) -> List[Tuple[Args, Vector]]:
        """Nonzero values on nondegenerate tuples."""
        return [
            (args, self.value(*args))
            for args in nondegenerate_tuples(self.H, self.arity)
            if self(*args)
        ]


@dataclass(frozen=True)
class Cocycle2:
    """
    (beta, tau) in bidegrees (0, 2) and (1, 1). "Cocycle" names the shape;
    membership in Z2_N is checked by d2 / is_cocycle.
    """
    beta: Cochain
    tau: Cochain
    actions: ActionPair

    def __post_init__(self) -> None:
        A = self.actions
        for part in (self.beta, self.tau):
            if part.arity != 2 or part.H != A.H or part.I.moduli != A.I.moduli:
                raise DimensionMismatch("beta and tau must be 2-cochains on (H, I) of the actions")

    @classmethod
    def zero(cls, A: ActionPair) -> "Cocycle2":
        return cls(
            Cochain.zero(A.H, A.I, 2, (0, 2)),
            Cochain.zero(A.H, A.I, 2, (1, 1)),
            A,
        )

    @classmethod
    def from_values(
        cls,
        A: ActionPair,
        beta: Mapping[Args, Sequence[int]],
        tau: Mapping[Args, Sequence[int]],
    ) -> "Cocycle2":
        return cls(
            Cochain.from_values(A.H, A.I, 2, beta, (0, 2)),
            Cochain.from_values(A.H, A.I, 2, tau, (1, 1)),
            A,
        )

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        return Cocycle2(self.beta + other.beta, self.tau + other.tau, self.actions)

    def __sub__(self, other: "Cocycle2") -> "Cocycle2":
        return Cocycle2(self.beta - other.beta, self.tau - other.tau, self.actions)

    def is_zero(self) -> bool:
        return self.beta.is_zero() and self.tau.is_zero()


def c2_failures(c: Cocycle2) -> List[AxiomFailure]:
    """Why (beta, tau) is not in C2_N: asymmetric beta or nonzero degenerate values."""
    H = c.actions.H
    failures: List[AxiomFailure] = []
    asymmetric = next(
        ((a, b) for a in H.elements for b in H.elements if c.beta(a, b) != c.beta(b, a)), None
    )
    if asymmetric is not None:
        failures.append(AxiomFailure(axiom="beta_symmetric", witness=list(asymmetric)))
    for label, part in (("beta", c.beta), ("tau", c.tau)):
        witness = next((args for args in all_tuples(H, 2) if 0 in args and part(*args)), None)
        if witness is not None:
            failures.append(AxiomFailure(axiom=f"{label}_normalized", witness=list(witness)))
    return failures


# -----------------------------------------------------------------------------
# Differentials on tables
# -----------------------------------------------------------------------------
def _d0_values(A: ActionPair, y: int) -> Cochain:
    I, rho = A.I, A.nu_sigma
    return Cochain.from_function(A.H, I, 1, lambda h: I.minus(rho[h][y], y), (0, 1))


def _d1_values(A: ActionPair, theta: Cochain) -> Cocycle2:
    H, I, nu, sigma, nu_inv = A.H, A.I, A.nu, A.sigma, A.nu_inv

    def g(a: int, b: int) -> int:
        return signed_sum(I, [theta(b), theta(a)], [theta(H.plus(a, b))])

    def f(a: int, b: int) -> int:
        ab = H.comp(a, b)
        twisted = nu[ab][sigma[b][nu_inv[a][theta(a)]]]
        return signed_sum(I, [nu[a][theta(b)], twisted], [theta(ab)])

    return Cocycle2(
        Cochain.from_function(H, I, 2, g, (0, 2)),
        Cochain.from_function(H, I, 2, f, (1, 1)),
        A,
    )


def _d2_functions(A: ActionPair, g: Cochain, f: Cochain) -> Tuple[Callable[..., int], ...]:
    H, I, nu, sigma, nu_inv = A.H, A.I, A.nu, A.sigma, A.nu_inv

    def vertical_g(a: int, b: int, c: int) -> int:
        return signed_sum(I, [g(b, c), g(a, H.plus(b, c))], [g(H.plus(a, b), c), g(a, b)])

    def horizontal_g(a: int, b: int, c: int) -> int:
        return signed_sum(
            I,
            [nu[a][g(b, c)], g(a, H.comp(a, H.plus(b, c)))],
            [g(H.comp(a, b), H.comp(a, c))],
        )

    def vertical_f(a: int, b: int, c: int) -> int:
        return signed_sum(I, [f(a, b), f(a, c)], [f(a, H.plus(b, c))])

    def horizontal_f(a: int, b: int, c: int) -> int:
        ab = H.comp(a, b)
        abc = H.comp(ab, c)
        last = nu[abc][sigma[c][nu_inv[ab][f(a, b)]]]
        return signed_sum(I, [nu[a][f(b, c)], f(a, H.comp(b, c))], [f(ab, c), last])

    def middle(a: int, b: int, c: int) -> int:
        return I.minus(horizontal_g(a, b, c), vertical_f(a, b, c))

    return vertical_g, middle, horizontal_f


# -----------------------------------------------------------------------------
# The complex as integer linear algebra
# -----------------------------------------------------------------------------
def _shuffle_terms(j: int, r: int) -> List[Tuple[int, Args]]:
    """(sign, slots) per (r, j-r)-shuffle; position p of the tail takes argument slots[p]."""
    terms = []
    for first in combinations(range(j), r):
        rest = [p for p in range(j) if p not in first]
        slots = [0] * j
        for k, p in enumerate(first):
            slots[p] = k
        for k, p in enumerate(rest):
            slots[p] = r + k
        inversions = sum(1 for x in range(j) for y in range(x + 1, j) if slots[x] > slots[y])
        terms.append((-1 if inversions % 2 else 1, tuple(slots)))
    return terms


def _shuffle_map(H: FiniteBrace, I: FgAbelianGroup, bidegree: Tuple[int, int]) -> AbelianHom:
    """Fun(nondegenerate H^n, I) -> relations; its kernel is C^{i,j}_N."""
    i, j = bidegree
    tuples = nondegenerate_tuples(H, i + j)
    position = {t: k for k, t in enumerate(tuples)}
    k = I.rank
    shuffles = [_shuffle_terms(j, r) for r in range(1, j)]
    source = I.power(len(tuples))
    target = I.power(len(tuples) * len(shuffles))

    def relations(vector: Vector) -> List[int]:
        out: List[int] = []
        for t in tuples:
            head, tail = t[:i], t[i:]
            for terms in shuffles:
                total = [0] * k
                for sign, slots in terms:
                    permuted = head + tuple(tail[s] for s in slots)
                    start = position[permuted] * k
                    total = [x + sign * v for x, v in zip(total, vector[start:start + k])]
                out.extend(total)
        return out

    return AbelianHom.from_function(source, target, relations)


@dataclass(frozen=True)
class CochainSpace:
    """Presentation of C^{i,j}_N inside the functions on nondegenerate tuples."""
    bidegree: Tuple[int, int]
    tuples: List[Args]
    ambient: CoordinateSpace
    subgroup: Subgroup
    structure: FgAbelianGroup

    @property
    def labels(self) -> List[Tuple[Args, int]]:
        """(tuple, I-coordinate) of every ambient generator."""
        k = self.ambient.rank // len(self.tuples) if self.tuples else 0
        return [(t, c) for t in self.tuples for c in range(k)]


def cochain_space(H: FiniteBrace, I: FgAbelianGroup, bidegree: Tuple[int, int]) -> CochainSpace:
    i, j = bidegree
    if i < 0 or j < 1 or i + j > 3:
        raise DimensionMismatch(f"bidegree {bidegree} is outside the low-degree complex", bidegree)
    shuffles = _shuffle_map(H, I, bidegree)
    subgroup = shuffles.kernel()
    structure = Subquotient(subgroup, Subgroup(shuffles.source)).structure
    return CochainSpace(bidegree, nondegenerate_tuples(H, i + j), shuffles.source, subgroup, structure)


Element = Union[Cochain, Cocycle2]


class BraceComplex:
    """
    Matrices of d0, d1, d2 and of the C2_N conditions for one action pair.
    Obtain instances through brace_complex(A), which caches them.
    """

    def __init__(self, A: ActionPair) -> None:
        self.actions = A
        self.H = A.H
        self.I = A.I
        self.points = list(range(1, A.H.order))
        self.pairs = nondegenerate_tuples(A.H, 2)
        self.triples = nondegenerate_tuples(A.H, 3)
        self.c1 = A.I.power(len(self.points))
        self.c2 = A.I.power(2 * len(self.pairs))
        self.c3 = A.I.power(3 * len(self.triples))

    # -------------------------------------------------------------------------
    # Vector layouts
    # -------------------------------------------------------------------------
    def _blocks(self, vector: Sequence[int], count: int) -> List[int]:
        k = self.I.rank
        return [self.I.index_of(vector[b * k:(b + 1) * k]) for b in range(count)]

    def cochain1_to_vector(self, theta: Cochain) -> Vector:
        return tuple(c for h in self.points for c in theta.value(h))

    def vector_to_cochain1(self, vector: Sequence[int]) -> Cochain:
        values = (0,) + tuple(self._blocks(vector, len(self.points)))
        return Cochain(self.H, self.I, 1, values, (0, 1))

    def _pairs_vector(self, part: Cochain) -> Vector:
        return tuple(c for args in self.pairs for c in part.value(*args))

    def cocycle_to_vector(self, c: Cocycle2) -> Vector:
        return self._pairs_vector(c.beta) + self._pairs_vector(c.tau)

    def vector_to_cocycle(self, vector: Sequence[int]) -> Cocycle2:
        blocks = self._blocks(vector, 2 * len(self.pairs))
        half = len(self.pairs)
        beta = {args: self.I.coords_of(x) for args, x in zip(self.pairs, blocks[:half])}
        tau = {args: self.I.coords_of(x) for args, x in zip(self.pairs, blocks[half:])}
        return Cocycle2.from_values(self.actions, beta, tau)

    def to_vector(self, element: Element) -> Vector:
        if isinstance(element, Cocycle2):
            return self.cocycle_to_vector(element)
        if element.arity == 1:
            return self.cochain1_to_vector(element)
        raise DimensionMismatch(f"no vector layout for {element.arity}-cochains")

    def from_vector(self, degree: int, vector: Sequence[int]) -> Element:
        return self.vector_to_cochain1(vector) if degree == 1 else self.vector_to_cocycle(vector)

    def space(self, degree: int) -> CoordinateSpace:
        return self.c1 if degree == 1 else self.c2

    # -------------------------------------------------------------------------
    # Linear maps
    # -------------------------------------------------------------------------
    @cached_property
    def fixed_map(self) -> AbelianHom:
        """y -> (nu_h(y) - y)_h; its kernel is I_nu."""
        I, nu = self.I, self.actions.nu

        def fn(y: Vector) -> List[int]:
            x = I.index_of(y)
            return [c for h in self.points for c in I.coords_of(I.minus(nu[h][x], x))]

        return AbelianHom.from_function(I, I.power(len(self.points)), fn)

    @cached_property
    def d0_map(self) -> AbelianHom:
        return AbelianHom.from_function(
            self.I, self.c1,
            lambda y: self.cochain1_to_vector(_d0_values(self.actions, self.I.index_of(y))),
        )

    @cached_property
    def d1_map(self) -> AbelianHom:
        return AbelianHom.from_function(
            self.c1, self.c2,
            lambda v: self.cocycle_to_vector(_d1_values(self.actions, self.vector_to_cochain1(v))),
        )

    def _d2_vector(self, vector: Sequence[int]) -> List[int]:
        c = self.vector_to_cocycle(vector)
        out: List[int] = []
        for fn in _d2_functions(self.actions, c.beta, c.tau):
            for args in self.triples:
                out.extend(self.I.coords_of(fn(*args)))
        return out

    @cached_property
    def additive_map(self) -> AbelianHom:
        """theta -> theta(h2) - theta(h1 + h2) + theta(h1), the beta part of d1."""
        return AbelianHom.from_function(
            self.c1,
            self.I.power(len(self.pairs)),
            lambda v: self._beta_part(self.d1_map(v)),
        )

    @cached_property
    def d2_map(self) -> AbelianHom:
        return AbelianHom.from_function(self.c2, self.c3, self._d2_vector)

    @cached_property
    def _symmetry_map(self) -> AbelianHom:
        return _shuffle_map(self.H, self.I, (0, 2))

    def _beta_part(self, vector: Sequence[int]) -> Vector:
        return tuple(vector[: len(self.pairs) * self.I.rank])

    def _conditions(self, vector: Sequence[int], restricted: bool) -> List[int]:
        out = list(self._symmetry_map(self._beta_part(vector)))
        out.extend(self._d2_vector(vector))
        if restricted:
            out.extend(self._beta_part(vector))
        return out

    @cached_property
    def cycle_map(self) -> AbelianHom:
        target = CoordinateSpace(self._symmetry_map.target.moduli + self.c3.moduli)
        return AbelianHom.from_function(self.c2, target, lambda v: self._conditions(v, False))

    @cached_property
    def restricted_cycle_map(self) -> AbelianHom:
        target = CoordinateSpace(
            self._symmetry_map.target.moduli + self.c3.moduli + self.I.power(len(self.pairs)).moduli
        )
        return AbelianHom.from_function(self.c2, target, lambda v: self._conditions(v, True))

    # -------------------------------------------------------------------------
    # Subgroups
    # -------------------------------------------------------------------------
    @cached_property
    def fixed(self) -> Subgroup:
        return self.fixed_map.kernel()

    @cached_property
    def z1(self) -> Subgroup:
        return self.d1_map.kernel()

    @cached_property
    def b1(self) -> Subgroup:
        return Subgroup(self.c1, [self.d0_map(y) for y in self.fixed.generators()])

    @cached_property
    def z2(self) -> Subgroup:
        z2 = self.cycle_map.kernel()
        logger.info("Z2_N of order %d in C2 of rank %d", z2.order, self.c2.rank)
        return z2

    @cached_property
    def b2(self) -> Subgroup:
        return self.d1_map.image()

    @cached_property
    def z2_restricted(self) -> Subgroup:
        return self.restricted_cycle_map.kernel()


@lru_cache(maxsize=64)
def brace_complex(A: ActionPair) -> BraceComplex:
    return BraceComplex(A)


# -----------------------------------------------------------------------------
# Groups of cochains and cohomology groups
# -----------------------------------------------------------------------------
class CochainGroup:
    """A subgroup of C1 or C2 (cocycles, coboundaries) with element conversion."""

    def __init__(self, complex_: BraceComplex, degree: int, subgroup: Subgroup) -> None:
        self.complex = complex_
        self.degree = degree
        self.subgroup = subgroup
        self._presentation = Subquotient(subgroup, Subgroup(complex_.space(degree)))

    @property
    def structure(self) -> FgAbelianGroup:
        return self._presentation.structure

    @property
    def order(self) -> int:
        return self.subgroup.order

    def contains(self, element: Element) -> bool:
        return self.subgroup.contains(self.complex.to_vector(element))

    def generators(self) -> List[Element]:
        return [self.complex.from_vector(self.degree, g) for g in self._presentation.generators()]

    def vectors(self) -> List[Vector]:
        if self.order > settings.MAX_BRUTE_FORCE:
            raise OrderTooLarge(f"refusing to list {self.order} elements", (self.order,))
        return self.subgroup.elements()

    def elements(self) -> List[Element]:
        return [self.complex.from_vector(self.degree, v) for v in self.vectors()]

    def inclusion(self) -> AbelianHom:
        return AbelianHom.from_function(
            self.structure, self.complex.space(self.degree), self._presentation.representative
        )


class CohomologyGroup:
    """
    cycles / boundaries in invariant factor form. Classes are identified by
    their coordinates in `structure`; representatives are lexicographically
    least in the cochain vector order.
    """

    def __init__(
        self,
        complex_: BraceComplex,
        degree: int,
        cycles: Subgroup,
        boundaries: Subgroup,
        *,
        restricted: bool = False,
        actions: Optional[ActionPair] = None,
    ) -> None:
        self.complex = complex_
        self.actions = actions or complex_.actions
        self.degree = degree
        self.restricted = restricted
        self.cycles = CochainGroup(complex_, degree, cycles)
        self.boundaries = CochainGroup(complex_, degree, boundaries)
        self.quotient = Subquotient(cycles, boundaries)

    @property
    def structure(self) -> FgAbelianGroup:
        return self.quotient.structure

    @property
    def order(self) -> int:
        return self.structure.order

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.structure.invariant_factors

    def membership(self, element: Element) -> Vector:
        """Class coordinates of a cocycle."""
        vector = self.complex.to_vector(element)
        if not self.cycles.subgroup.contains(vector):
            raise NotACocycle("the cochain is not a cocycle of this group")
        return self.quotient.coordinates(vector)

    def is_coboundary(self, element: Element) -> bool:
        return self.boundaries.contains(element)

    def cohomologous(self, first: Element, second: Element) -> bool:
        return self.membership(first) == self.membership(second)

    def representative(self, coords: Sequence[int]) -> Element:
        return self.complex.from_vector(self.degree, self.quotient.least_representative(coords))

    def representative_vectors(self) -> List[Vector]:
        if self.order > settings.MAX_LISTED_CLASSES:
            raise OrderTooLarge(
                f"{self.order} classes exceed the listing bound {settings.MAX_LISTED_CLASSES}",
                (self.order,),
            )
        return sorted(self.quotient.least_representative(c) for c in self.structure.elements())

    def representatives(self) -> List[Element]:
        return [self.complex.from_vector(self.degree, v) for v in self.representative_vectors()]

    def report(self, *, oracle_checked: bool = False) -> CohomologyReport:
        A = self.actions
        listed = self.order <= settings.MAX_LISTED_CLASSES
        return CohomologyReport(
            brace=A.H.label(),
            module=A.I.label(),
            actions=A.label(),
            degree=self.degree,
            restricted=self.restricted,
            invariant_factors=list(self.invariant_factors),
            order=self.order,
            cycles_order=self.cycles.order,
            boundaries_order=self.boundaries.order,
            representatives=[list(v) for v in self.representative_vectors()] if listed else [],
            oracle_checked=oracle_checked,
        )


# -----------------------------------------------------------------------------
# Public API
# -----------------------------------------------------------------------------
def require_good_pair(A: ActionPair) -> None:
    good, witness = is_good_pair(A)
    if not good:
        raise NotGoodPair(f"{A.label()} is not a good pair", witness)


def fixed_subgroup(A: ActionPair) -> Subgroup:
    """C0_N = I_nu, the elements fixed by every nu_h."""
    return brace_complex(A).fixed


def d0(y: Sequence[int], A: ActionPair) -> Cochain:
    """f_y(h) = nu_h(sigma_h(y)) - y for y in I_nu (given by coordinates)."""
    index = A.I.index_of(y)
    moved = next((h for h in A.H.elements if A.nu[h][index] != index), None)
    if moved is not None:
        raise NotInFixedSubgroup(f"nu_{moved} moves {tuple(y)}", (moved,))
    return _d0_values(A, index)


def d1(theta: Cochain, A: ActionPair) -> Cocycle2:
    if theta.arity != 1 or theta.H != A.H:
        raise DimensionMismatch("d1 takes a 1-cochain on H")
    if theta(0) != 0:
        raise NotNormalized("theta(0) must be 0", (0,))
    return _d1_values(A, theta)


def d2(c: Cocycle2) -> Tuple[Cochain, Cochain, Cochain]:
    """
    (v(beta), h(beta) - v(tau), h(tau)) in bidegrees (0, 3), (1, 2), (2, 1).
    """
    failures = c2_failures(c)
    if failures:
        raise NotInC2N(f"(beta, tau) fails {failures[0].axiom}", tuple(failures[0].witness))
    A = c.actions
    return tuple(  # type: ignore[return-value]
        Cochain.from_function(A.H, A.I, 3, fn, bidegree)
        for fn, bidegree in zip(_d2_functions(A, c.beta, c.tau), ((0, 3), (1, 2), (2, 1)))
    )


def is_cocycle(c: Cocycle2) -> bool:
    return not c2_failures(c) and all(part.is_zero() for part in d2(c))


def cocycle_report(c: Cocycle2) -> ValidationReport:
    """C2_N membership and d2 = 0, with the first failing triple per component."""
    failures = c2_failures(c)
    if not failures:
        for label, part in zip(("d2_vertical", "d2_mixed", "d2_horizontal"), d2(c)):
            witness = next((args for args in all_tuples(c.actions.H, 3) if part(*args)), None)
            if witness is not None:
                failures.append(AxiomFailure(axiom=label, witness=list(witness)))
    return ValidationReport.from_failures("cocycle", failures)


def z1(A: ActionPair) -> CochainGroup:
    """Derivations: theta with d1(theta) = 0."""
    require_good_pair(A)
    cx = brace_complex(A)
    return CochainGroup(cx, 1, cx.z1)


def h1(A: ActionPair) -> CohomologyGroup:
    require_good_pair(A)
    cx = brace_complex(A)
    return CohomologyGroup(cx, 1, cx.z1, cx.b1, actions=A)


def z2(A: ActionPair) -> CochainGroup:
    require_good_pair(A)
    cx = brace_complex(A)
    return CochainGroup(cx, 2, cx.z2)


def b2(A: ActionPair) -> CochainGroup:
    require_good_pair(A)
    cx = brace_complex(A)
    return CochainGroup(cx, 2, cx.b2)


def h2(A: ActionPair) -> CohomologyGroup:
    require_good_pair(A)
    cx = brace_complex(A)
    group = CohomologyGroup(cx, 2, cx.z2, cx.b2, actions=A)
    logger.info("H2_N(%s, %s) = %s", A.H.label(), A.I.label(), group.structure.label())
    return group


def rh2(A: ActionPair) -> CohomologyGroup:
    """Classes of H2_N containing a cocycle with beta = 0."""
    require_good_pair(A)
    cx = brace_complex(A)
    return CohomologyGroup(cx, 2, cx.z2_restricted.join(cx.b2), cx.b2, restricted=True, actions=A)


def coboundary_witness(first: Cocycle2, second: Cocycle2) -> Optional[Cochain]:
    """Some normalized theta with d1(theta) = first - second, or None."""
    cx = brace_complex(first.actions)
    solution = cx.d1_map.solve(cx.cocycle_to_vector(first - second))
    return None if solution is None else cx.vector_to_cochain1(solution)


def additive_coboundary_map(A: ActionPair) -> AbelianHom:
    return brace_complex(A).additive_map


# -----------------------------------------------------------------------------
# Brute-force oracles
# -----------------------------------------------------------------------------
def _check_search_space(size: int, what: str) -> None:
    if size > settings.MAX_BRUTE_FORCE:
        raise OrderTooLarge(f"{what}: {size} candidates exceed {settings.MAX_BRUTE_FORCE}", (size,))


def all_normalized_cochains1(A: ActionPair) -> List[Cochain]:
    n = A.H.order
    _check_search_space(A.I.order ** (n - 1), "1-cochain enumeration")
    return [
        Cochain(A.H, A.I, 1, (0,) + values, (0, 1))
        for values in product(range(A.I.order), repeat=n - 1)
    ]


def oracle_z1(A: ActionPair) -> List[Cochain]:
    return [theta for theta in all_normalized_cochains1(A) if _d1_values(A, theta).is_zero()]


def oracle_b2(A: ActionPair) -> List[Vector]:
    cx = brace_complex(A)
    return sorted({cx.cocycle_to_vector(_d1_values(A, theta)) for theta in all_normalized_cochains1(A)})


def oracle_z2(A: ActionPair) -> List[Vector]:
    """Every normalized (beta, tau) with symmetric beta and d2 = 0, as vectors."""
    cx = brace_complex(A)
    symmetric = [(a, b) for a, b in cx.pairs if a <= b]
    _check_search_space(A.I.order ** (len(symmetric) + len(cx.pairs)), "2-cochain enumeration")
    found = []
    for values in product(range(A.I.order), repeat=len(symmetric) + len(cx.pairs)):
        beta: Dict[Args, Vector] = {}
        for (a, b), x in zip(symmetric, values):
            beta[(a, b)] = beta[(b, a)] = A.I.coords_of(x)
        tau = {args: A.I.coords_of(x) for args, x in zip(cx.pairs, values[len(symmetric):])}
        c = Cocycle2.from_values(A, beta, tau)
        if all(part.is_zero() for part in d2(c)):
            found.append(cx.cocycle_to_vector(c))
    return sorted(found)


def oracle_coboundary_witness(first: Cocycle2, second: Cocycle2) -> Optional[Cochain]:
    """Search all normalized theta for d1(theta) = first - second."""
    target = first - second
    for theta in all_normalized_cochains1(first.actions):
        if _d1_values(first.actions, theta) == target:
            return theta
    return None
