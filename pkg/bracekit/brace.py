# bracekit/brace.py
"""
Finite left braces.

Responsibilities:
- FiniteBrace: Cayley tables of + and of the multiplicative group on
  {0, ..., n-1}, identity at 0.
- verify_brace: axiom-by-axiom validation with witnesses.
- lambda maps, subsets (subbrace, left ideal, ideal, central ideal) and
  sub-braces with their inclusion.
- BraceMorphism: verification, composition, inverse, kernel.
- Exhaustive automorphism search, quotients by ideals, Sylow left ideals.
- The set-theoretic Yang-Baxter solution of a brace and its checker.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import isprime, multiplicity, primefactors

from .algebra import FgAbelianGroup, Table, decompose_abelian, table_failures
from .config import settings
from .errors import (
    IndexOutOfRange,
    NotABrace,
    NotAGroup,
    NotALeftIdeal,
    NotAnIdeal,
    OrderTooLarge,
    PrimeDoesNotDivideOrder,
)
from .models import AxiomFailure, ValidationReport

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


def compose_perms(outer: Sequence[int], inner: Sequence[int]) -> Perm:
    """outer after inner."""
    return tuple(outer[x] for x in inner)


def invert_perm(perm: Sequence[int]) -> Perm:
    inverse = [0] * len(perm)
    for x, y in enumerate(perm):
        inverse[y] = x
    return tuple(inverse)


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


# -----------------------------------------------------------------------------
# Braces
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class FiniteBrace:
    order: int
    add: Tuple[Tuple[int, ...], ...]
    circ: Tuple[Tuple[int, ...], ...]
    name: Optional[str] = field(default=None, compare=False)

    # -------------------------------------------------------------------------
    # Factories
    # -------------------------------------------------------------------------
    @classmethod
    def from_tables(
        cls,
        add: Table,
        circ: Table,
        name: Optional[str] = None,
        *,
        check: bool = True,
    ) -> "FiniteBrace":
        if check:
            report = verify_brace(add, circ)
            if not report.valid:
                first = report.failures[0]
                raise NotABrace(
                    f"tables{f' of {name}' if name else ''} fail {first.axiom}",
                    tuple(first.witness),
                )
        return cls(
            order=len(add),
            add=tuple(tuple(int(x) for x in row) for row in add),
            circ=tuple(tuple(int(x) for x in row) for row in circ),
            name=name,
        )

    @classmethod
    def trivial(cls, n: int, name: Optional[str] = None) -> "FiniteBrace":
        """The trivial brace on Z/n."""
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        return cls(order=n, add=table, circ=table, name=name or f"Z{n}")

    @classmethod
    def trivial_on(cls, group: FgAbelianGroup, name: Optional[str] = None) -> "FiniteBrace":
        """An abelian group viewed as a trivial brace, carrier = element indices."""
        return cls(order=group.order, add=group.add_table, circ=group.add_table, name=name)

    # -------------------------------------------------------------------------
    # Element arithmetic
    # -------------------------------------------------------------------------
    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def neg_table(self) -> Perm:
        return tuple(next(b for b in self.elements if self.add[a][b] == 0) for a in self.elements)

    @cached_property
    def inv_table(self) -> Perm:
        return tuple(next(b for b in self.elements if self.circ[a][b] == 0) for a in self.elements)

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def minus(self, a: int, b: int) -> int:
        return self.add[a][self.neg_table[b]]

    def negate(self, a: int) -> int:
        return self.neg_table[a]

    def comp(self, a: int, b: int) -> int:
        return self.circ[a][b]

    def inverse(self, a: int) -> int:
        return self.inv_table[a]

    def multiple(self, k: int, a: int) -> int:
        result = 0
        for _ in range(k % self.additive_order(a)):
            result = self.add[result][a]
        return result

    @cached_property
    def lambda_table(self) -> Tuple[Perm, ...]:
        return tuple(
            tuple(self.minus(self.circ[a][b], a) for b in self.elements) for a in self.elements
        )

    def lam(self, a: int) -> Perm:
        return self.lambda_table[a]

    @cached_property
    def _additive_orders(self) -> Tuple[int, ...]:
        return tuple(_cycle_length(self.add, a) for a in self.elements)

    @cached_property
    def _multiplicative_orders(self) -> Tuple[int, ...]:
        return tuple(_cycle_length(self.circ, a) for a in self.elements)

    def additive_order(self, a: int) -> int:
        return self._additive_orders[a]

    def multiplicative_order(self, a: int) -> int:
        return self._multiplicative_orders[a]

    def is_trivial(self) -> bool:
        return self.add == self.circ

    def label(self) -> str:
        return self.name or f"brace of order {self.order}"

    def check_index(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise IndexOutOfRange(f"{a} is not an element of {self.label()}", (a,))
        return a


def _cycle_length(table: Sequence[Sequence[int]], a: int) -> int:
    k, x = 1, a
    while x != 0:
        x = table[x][a]
        k += 1
    return k


# -----------------------------------------------------------------------------
# Validation
# -----------------------------------------------------------------------------
def verify_brace(add: Table, circ: Table) -> ValidationReport:
    """
    Check every brace axiom; each failing axiom is reported with a witness.
    """
    n = len(add)
    if len(circ) != n:
        return ValidationReport.from_failures(
            "brace", [AxiomFailure(axiom="square", witness=[n, len(circ)], detail="tables differ in size")]
        )

    failures: List[AxiomFailure] = []
    structural = False
    for prefix, table, commutative in (("add", add, True), ("circ", circ, False)):
        for axiom, witness in table_failures(table, commutative=commutative):
            failures.append(AxiomFailure(axiom=f"{prefix}_{axiom}", witness=list(witness)))
            structural = structural or axiom in ("square", "closure")

    if not structural:
        witness = next(
            (
                (a, b, c)
                for a in range(n)
                for b in range(n)
                for c in range(n)
                if add[circ[a][add[b][c]]][a] != add[circ[a][b]][circ[a][c]]
            ),
            None,
        )
        if witness is not None:
            failures.append(
                AxiomFailure(
                    axiom="compatibility",
                    witness=list(witness),
                    detail="a o (b + c) + a != a o b + a o c",
                )
            )
    return ValidationReport.from_failures("brace", failures)


def lambda_map(E: FiniteBrace, a: int) -> Perm:
    """lambda_a(b) = a o b - a."""
    return E.lam(E.check_index(a))


def check_lambda_identities(E: FiniteBrace) -> ValidationReport:
    """
    lambda is a homomorphism into Aut(E, +), a + b = a o lambda_a^-1(b) and
    a o b = a + lambda_a(b).
    """
    failures: List[AxiomFailure] = []
    pairs = [(a, b) for a in E.elements for b in E.elements]

    def first(axiom: str, predicate) -> None:
        witness = next((p for p in pairs if not predicate(*p)), None)
        if witness is not None:
            failures.append(AxiomFailure(axiom=axiom, witness=list(witness)))

    first("lambda_additive", lambda a, b: all(
        E.lam(a)[E.plus(b, c)] == E.plus(E.lam(a)[b], E.lam(a)[c]) for c in E.elements
    ))
    first("lambda_homomorphism", lambda a, b: E.lam(E.comp(a, b)) == compose_perms(E.lam(a), E.lam(b)))
    first("sum_identity", lambda a, b: E.plus(a, b) == E.comp(a, invert_perm(E.lam(a))[b]))
    first("product_identity", lambda a, b: E.comp(a, b) == E.plus(a, E.lam(a)[b]))
    return ValidationReport.from_failures("lambda", failures)


def is_lambda_homomorphism(E: FiniteBrace) -> bool:
    """lambda_{a o b} = lambda_a lambda_b for all a, b."""
    return all(
        E.lam(E.comp(a, b)) == compose_perms(E.lam(a), E.lam(b)) for a in E.elements for b in E.elements
    )


def normalize_identity(add: Table, circ: Table) -> Tuple[Table, Table]:
    """Swap labels so that the additive identity is 0; both tables are relabelled."""
    n = len(add)
    identity = next((e for e in range(n) if all(add[e][x] == x for x in range(n))), None)
    if identity is None:
        raise NotAGroup("the addition table has no identity element")
    if identity == 0:
        return tuple(map(tuple, add)), tuple(map(tuple, circ))
    relabel = list(range(n))
    relabel[0], relabel[identity] = identity, 0
    # relabel is its own inverse
    def move(table: Table) -> Table:
        return tuple(tuple(relabel[table[relabel[a]][relabel[b]]] for b in range(n)) for a in range(n))

    logger.debug("moved the identity from %d to 0", identity)
    return move(add), move(circ)


# -----------------------------------------------------------------------------
# Subsets
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class BraceSubset:
    ambient: FiniteBrace
    elements: Tuple[int, ...]
    is_subbrace: bool
    is_left_ideal: bool
    is_ideal: bool
    is_central: bool

    def __contains__(self, a: int) -> bool:
        return a in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def classify_subset(E: FiniteBrace, S: Iterable[int]) -> BraceSubset:
    members = {E.check_index(a) for a in S}
    elements = tuple(sorted(members))

    closed = (
        0 in members
        and all(E.plus(a, b) in members for a in elements for b in elements)
        and all(E.comp(a, b) in members for a in elements for b in elements)
    )
    left_ideal = closed and all(E.lam(a)[y] in members for a in E.elements for y in elements)
    ideal = left_ideal and all(
        E.comp(E.comp(a, y), E.inverse(a)) in members for a in E.elements for y in elements
    )
    central = ideal and all(
        E.comp(y, a) == E.comp(a, y) == E.plus(a, y) for a in E.elements for y in elements
    )
    return BraceSubset(
        ambient=E,
        elements=elements,
        is_subbrace=closed,
        is_left_ideal=left_ideal,
        is_ideal=ideal,
        is_central=central,
    )


def sub_brace(E: FiniteBrace, S: Iterable[int], name: Optional[str] = None) -> Tuple[FiniteBrace, "BraceMorphism"]:
    """
    A subbrace relabelled as {0, ..., k-1} in increasing order, with its
    inclusion into E.
    """
    subset = classify_subset(E, S)
    if not subset.is_subbrace:
        raise NotABrace("the subset is not closed under both operations", subset.elements)
    position: Dict[int, int] = {a: i for i, a in enumerate(subset.elements)}
    add = tuple(tuple(position[E.plus(a, b)] for b in subset.elements) for a in subset.elements)
    circ = tuple(tuple(position[E.comp(a, b)] for b in subset.elements) for a in subset.elements)
    K = FiniteBrace(order=len(subset.elements), add=add, circ=circ, name=name)
    return K, BraceMorphism(K, E, subset.elements)


# -----------------------------------------------------------------------------
# Morphisms
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class BraceMorphism:
    source: FiniteBrace
    target: FiniteBrace
    table: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.source.order:
            raise IndexOutOfRange(
                f"map of length {len(self.table)} on a source of order {self.source.order}"
            )
        for a in self.table:
            self.target.check_index(a)

    @classmethod
    def identity(cls, E: FiniteBrace) -> "BraceMorphism":
        return cls(E, E, identity_perm(E.order))

    def __call__(self, a: int) -> int:
        return self.table[a]

    def failures(self) -> List[AxiomFailure]:
        S, T, f = self.source, self.target, self.table
        failures: List[AxiomFailure] = []
        if f[0] != 0:
            failures.append(AxiomFailure(axiom="zero", witness=[0]))
        pairs = [(a, b) for a in S.elements for b in S.elements]
        additive = next((p for p in pairs if f[S.plus(*p)] != T.plus(f[p[0]], f[p[1]])), None)
        if additive is not None:
            failures.append(AxiomFailure(axiom="additive", witness=list(additive)))
        multiplicative = next((p for p in pairs if f[S.comp(*p)] != T.comp(f[p[0]], f[p[1]])), None)
        if multiplicative is not None:
            failures.append(AxiomFailure(axiom="multiplicative", witness=list(multiplicative)))
        return failures

    def verify(self) -> ValidationReport:
        return ValidationReport.from_failures("morphism", self.failures())

    def is_valid(self) -> bool:
        return not self.failures()

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.table)) == self.source.order

    def is_automorphism(self) -> bool:
        return self.source == self.target and self.is_bijective() and self.is_valid()

    def is_identity(self) -> bool:
        return self.source == self.target and self.table == identity_perm(self.source.order)

    def compose(self, inner: "BraceMorphism") -> "BraceMorphism":
        """self after inner."""
        return BraceMorphism(inner.source, self.target, compose_perms(self.table, inner.table))

    def inverse(self) -> "BraceMorphism":
        if not self.is_bijective():
            raise NotABrace("only bijective morphisms have inverses", self.table)
        return BraceMorphism(self.target, self.source, invert_perm(self.table))

    def kernel(self) -> BraceSubset:
        return classify_subset(self.source, [a for a in self.source.elements if self.table[a] == 0])

    def image(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.table)))


# -----------------------------------------------------------------------------
# Automorphisms
# -----------------------------------------------------------------------------
def brace_automorphisms(E: FiniteBrace, bound: Optional[int] = None) -> List[BraceMorphism]:
    """
    All automorphisms of E, sorted by table. The candidates are additive maps
    sending an additive basis to elements with the same additive and
    multiplicative orders.
    """
    bound = bound or settings.MAX_AUTOMORPHISM_ORDER
    if E.order > bound:
        raise OrderTooLarge(f"{E.label()} has order {E.order} > {bound}", (E.order,))

    group, iso = decompose_abelian(E.add)
    back = invert_perm(iso)
    basis = [back[group.index_of(e)] for e in group.basis()]
    coords = [group.coords_of(iso[a]) for a in E.elements]

    def profile(a: int) -> Tuple[int, int]:
        return E.additive_order(a), E.multiplicative_order(a)

    candidates = [[x for x in E.elements if profile(x) == profile(b)] for b in basis]
    multiples = [[E.multiple(k, x) for k in range(max(E.order, 1))] for x in E.elements]
    logger.debug(
        "automorphism search on %s: %d candidate basis images",
        E.label(),
        prod(len(c) for c in candidates),
    )

    found: List[BraceMorphism] = []
    for images in product(*candidates):
        table = []
        for a in E.elements:
            value = 0
            for c, y in zip(coords[a], images):
                value = E.plus(value, multiples[y][c])
            table.append(value)
        if len(set(table)) != E.order:
            continue
        if all(
            table[E.comp(a, b)] == E.comp(table[a], table[b])
            for a in E.elements
            for b in E.elements
        ):
            found.append(BraceMorphism(E, E, tuple(table)))
    found.sort(key=lambda f: f.table)
    logger.info("%s has %d brace automorphisms", E.label(), len(found))
    return found


# -----------------------------------------------------------------------------
# Quotients and Sylow left ideals
# -----------------------------------------------------------------------------
def quotient_brace(E: FiniteBrace, ideal: Iterable[int], name: Optional[str] = None) -> Tuple[FiniteBrace, BraceMorphism]:
    """
    E / I with cosets labelled by their least element, in increasing order.
    """
    subset = classify_subset(E, ideal)
    if not subset.is_ideal:
        raise NotAnIdeal("the subset is not an ideal", subset.elements)

    label = [-1] * E.order
    representatives: List[int] = []
    for a in E.elements:
        if label[a] < 0:
            for y in subset.elements:
                label[E.plus(a, y)] = len(representatives)
            representatives.append(a)

    add = tuple(tuple(label[E.plus(a, b)] for b in representatives) for a in representatives)
    circ = tuple(tuple(label[E.comp(a, b)] for b in representatives) for a in representatives)
    H = FiniteBrace(order=len(representatives), add=add, circ=circ, name=name)
    return H, BraceMorphism(E, H, tuple(label))


def prime_divisors(n: int) -> List[int]:
    return list(primefactors(n))


def sylow_left_ideal(E: FiniteBrace, p: int) -> BraceSubset:
    """
    Elements of p-power additive order: a Sylow p-subgroup of (E, +) and of
    (E, o), and a left ideal.
    """
    if not isprime(p) or E.order % p:
        raise PrimeDoesNotDivideOrder(f"{p} is not a prime divisor of {E.order}", (p,))
    elements = [a for a in E.elements if set(primefactors(E.additive_order(a))) <= {p}]
    subset = classify_subset(E, elements)
    expected = p ** multiplicity(p, E.order)
    if len(subset) != expected or not subset.is_left_ideal:
        raise NotALeftIdeal(
            f"Sylow {p}-subset of {E.label()} has size {len(subset)} (expected {expected}),"
            f" left ideal={subset.is_left_ideal}",
            tuple(elements),
        )
    return subset


# -----------------------------------------------------------------------------
# Yang-Baxter solution
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class YbeSolution:
    """
    r(x, y) = (lambda_x(y), lambda^-1_{lambda_x(y)}(x)).
    """
    brace: FiniteBrace

    @cached_property
    def _inverse_lambdas(self) -> Tuple[Perm, ...]:
        return tuple(invert_perm(self.brace.lam(a)) for a in self.brace.elements)

    def __call__(self, x: int, y: int) -> Tuple[int, int]:
        u = self.brace.lam(x)[y]
        return u, self._inverse_lambdas[u][x]

    def table(self) -> List[List[Tuple[int, int]]]:
        return [[self(x, y) for y in self.brace.elements] for x in self.brace.elements]


def ybe_solution(E: FiniteBrace) -> YbeSolution:
    return YbeSolution(E)


def check_ybe(solution: YbeSolution) -> ValidationReport:
    """Braid relation on E^3, involutivity and non-degeneracy."""
    E = solution.brace
    r = solution
    failures: List[AxiomFailure] = []

    def r12(t: Tuple[int, int, int]) -> Tuple[int, int, int]:
        u, v = r(t[0], t[1])
        return u, v, t[2]

    def r23(t: Tuple[int, int, int]) -> Tuple[int, int, int]:
        u, v = r(t[1], t[2])
        return t[0], u, v

    braid = next(
        (
            t
            for t in product(E.elements, repeat=3)
            if r12(r23(r12(t))) != r23(r12(r23(t)))
        ),
        None,
    )
    if braid is not None:
        failures.append(AxiomFailure(axiom="braid", witness=list(braid)))

    involutive = next(
        ((x, y) for x in E.elements for y in E.elements if r(*r(x, y)) != (x, y)),
        None,
    )
    if involutive is not None:
        failures.append(AxiomFailure(axiom="involutive", witness=list(involutive)))

    left = next(
        (x for x in E.elements if len({r(x, y)[0] for y in E.elements}) != E.order), None
    )
    if left is not None:
        failures.append(AxiomFailure(axiom="left_nondegenerate", witness=[left]))
    right = next(
        (y for y in E.elements if len({r(x, y)[1] for x in E.elements}) != E.order), None
    )
    if right is not None:
        failures.append(AxiomFailure(axiom="right_nondegenerate", witness=[right]))
    return ValidationReport.from_failures("ybe", failures)
