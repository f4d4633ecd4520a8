# bracekit/algebra.py
"""
Exact integer linear algebra over finitely generated abelian groups.

Responsibilities:
- IntMatrix and the Smith normal form (with the transforming matrices).
- Coordinate groups Z^n / diag(d) and finite abelian groups in invariant
  factor form, with the mixed-radix element indexing used by every table.
- Subgroups kept as triangular lattices (membership, least coset
  representatives, order) and subquotients A/B in invariant factor form.
- Homomorphisms given by integer matrices: kernel, image, preimages.
- Normalization of user supplied abelian Cayley tables.

Everything here is arbitrary-precision `int`; no value is ever truncated.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, prod
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .errors import DimensionMismatch, IdentityNotZero, NotAbelian, NotAGroup

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
Table = Sequence[Sequence[int]]


# -----------------------------------------------------------------------------
# Matrices
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch(f"ragged row of length {len(row)}, expected {cols}")
        return cls(len(rows), cols, tuple(int(x) for row in rows for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(self.column(j)) for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [other.column(j) for j in range(other.cols)]
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), col)) for col in columns] for i in range(self.rows)],
            other.cols,
        )

    def apply(self, vector: Sequence[int]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows))

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self) -> Vector:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))


def _identity_rows(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _smith(a: List[List[int]], m: int, n: int):
    """
    Smith form of the m x n row list `a`.

    Returns (S, U, U^-1, V, V^-1) as row lists with S = U . a . V and a
    nonnegative diagonal s1 | s2 | ...
    """
    if m == 0 or n == 0:
        return [[0] * n for _ in range(m)], _identity_rows(m), _identity_rows(m), _identity_rows(n), _identity_rows(n)
    s, u, v = smith_normal_decomp(Matrix(a), domain=ZZ)
    for i in range(min(m, n)):
        if s[i, i] < 0:
            s[i, :] = -s[i, :]
            u[i, :] = -u[i, :]
    return _rows(s), _rows(u), _rows(u.inv()), _rows(v), _rows(v.inv())


def _rows(matrix: Matrix) -> List[List[int]]:
    return [[int(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def smith_normal_form(matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Smith normal form S = U . M . V with U, V unimodular and s1 | s2 | ... >= 0.
    """
    s, u, _, v, _ = _smith(matrix.to_rows(), matrix.rows, matrix.cols)
    return (
        IntMatrix.from_rows(s, matrix.cols),
        IntMatrix.from_rows(u, matrix.rows),
        IntMatrix.from_rows(v, matrix.cols),
    )


def _extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) > 0, for a > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# -----------------------------------------------------------------------------
# Groups
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class CoordinateSpace:
    """
    Z^n modulo diag(moduli). Elements are coefficient vectors reduced into
    [0, d_i); element indices are mixed radix with the first coordinate most
    significant.
    """
    moduli: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d < 1 for d in self.moduli):
            raise DimensionMismatch("moduli must be positive", self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    def reduce(self, vector: Iterable[int]) -> Vector:
        values = tuple(vector)
        if len(values) != self.rank:
            raise DimensionMismatch(f"vector of length {len(values)} in a space of rank {self.rank}")
        return tuple(c % d for c, d in zip(values, self.moduli))

    def zero(self) -> Vector:
        return (0,) * self.rank

    def add(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        return self.reduce(a + b for a, b in zip(x, y))

    def sub(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        return self.reduce(a - b for a, b in zip(x, y))

    def neg(self, x: Sequence[int]) -> Vector:
        return self.reduce(-a for a in x)

    def scale(self, k: int, x: Sequence[int]) -> Vector:
        return self.reduce(k * a for a in x)

    def basis(self) -> List[Vector]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def elements(self) -> Iterator[Vector]:
        """All elements, in index order."""
        return product(*(range(d) for d in self.moduli))

    def index_of(self, vector: Sequence[int]) -> int:
        index = 0
        for c, d in zip(self.reduce(vector), self.moduli):
            index = index * d + c
        return index

    def coords_of(self, index: int) -> Vector:
        if not 0 <= index < self.order:
            raise DimensionMismatch(f"index {index} outside a group of order {self.order}")
        coords = []
        for d in reversed(self.moduli):
            index, c = divmod(index, d)
            coords.append(c)
        return tuple(reversed(coords))

    def element_order(self, vector: Sequence[int]) -> int:
        result = 1
        for c, d in zip(self.reduce(vector), self.moduli):
            k = d // gcd(c, d)
            result = result * k // gcd(result, k)
        return result

    def power(self, k: int) -> "CoordinateSpace":
        return CoordinateSpace(self.moduli * k)


@dataclass(frozen=True)
class FgAbelianGroup(CoordinateSpace):
    """
    A finite abelian group in invariant factor form d1 | d2 | ... with each
    d_i >= 2. The trivial group has no factors.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if any(d < 2 for d in self.moduli):
            raise DimensionMismatch("invariant factors must be at least 2", self.moduli)
        if any(b % a for a, b in zip(self.moduli, self.moduli[1:])):
            raise DimensionMismatch("invariant factors must divide one another", self.moduli)

    @classmethod
    def of(cls, factors: Sequence[int]) -> "FgAbelianGroup":
        return cls(tuple(int(d) for d in factors))

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.moduli

    def label(self) -> str:
        if not self.moduli:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.moduli)

    # index-level arithmetic used by every table evaluation
    @cached_property
    def add_table(self) -> Tuple[Tuple[int, ...], ...]:
        elements = list(self.elements())
        return tuple(
            tuple(self.index_of(self.add(x, y)) for y in elements) for x in elements
        )

    @cached_property
    def neg_table(self) -> Tuple[int, ...]:
        return tuple(self.index_of(self.neg(x)) for x in self.elements())

    def plus(self, i: int, j: int) -> int:
        return self.add_table[i][j]

    def minus(self, i: int, j: int) -> int:
        return self.add_table[i][self.neg_table[j]]

    def negate(self, i: int) -> int:
        return self.neg_table[i]

    def unit_indices(self) -> List[int]:
        """Indices of the standard generators e_1, ..., e_k."""
        return [self.index_of(e) for e in self.basis()]


# -----------------------------------------------------------------------------
# Subgroups
# -----------------------------------------------------------------------------
class Subgroup:
    """
    Subgroup of a CoordinateSpace, stored as the full-rank lattice L with
    diag(moduli) <= L <= Z^n in upper-triangular form: row j has its positive
    pivot in column j and zeros to its left.
    """

    def __init__(self, space: CoordinateSpace, generators: Iterable[Sequence[int]] = ()) -> None:
        self.space = space
        n = space.rank
        self._rows: List[List[int]] = [[0] * n for _ in range(n)]
        for j, d in enumerate(space.moduli):
            self._rows[j][j] = d
        for vector in generators:
            self.add(vector)

    @classmethod
    def whole(cls, space: CoordinateSpace) -> "Subgroup":
        return cls._from_rows(space, _identity_rows(space.rank))

    @classmethod
    def _from_rows(cls, space: CoordinateSpace, rows: List[List[int]]) -> "Subgroup":
        sub = cls.__new__(cls)
        sub.space = space
        sub._rows = [list(row) for row in rows]
        return sub

    # -------------------------------------------------------------------------
    # Internal helpers
    # -------------------------------------------------------------------------
    def _reduce_tail(self, vector: List[int], start: int) -> List[int]:
        moduli = self.space.moduli
        for k in range(start, len(vector)):
            vector[k] %= moduli[k]
        return vector

    def _lift(self, vector: Sequence[int]) -> List[int]:
        if len(vector) != self.space.rank:
            raise DimensionMismatch(
                f"vector of length {len(vector)} in a space of rank {self.space.rank}"
            )
        return self._reduce_tail([int(x) for x in vector], 0)

    # -------------------------------------------------------------------------
    # Public API
    # -------------------------------------------------------------------------
    def add(self, vector: Sequence[int]) -> None:
        """Enlarge the subgroup by one generator."""
        v = self._lift(vector)
        for j in range(len(v)):
            x = v[j]
            if x == 0:
                continue
            row = self._rows[j]
            p = row[j]
            if x % p == 0:
                q = x // p
                v = [a - q * b for a, b in zip(v, row)]
            else:
                g, s, t = _extended_gcd(p, x)
                merged = [s * b + t * a for a, b in zip(v, row)]
                v = [(p // g) * a - (x // g) * b for a, b in zip(v, row)]
                self._rows[j] = self._reduce_tail(merged, j + 1)
            v = self._reduce_tail(v, j + 1)

    def contains(self, vector: Sequence[int]) -> bool:
        v = self._lift(vector)
        for j in range(len(v)):
            x = v[j]
            if x == 0:
                continue
            row = self._rows[j]
            if x % row[j]:
                return False
            q = x // row[j]
            v = self._reduce_tail([a - q * b for a, b in zip(v, row)], j + 1)
        return True

    def reduce(self, vector: Sequence[int]) -> Vector:
        """The lexicographically least element of the coset vector + L."""
        v = self._lift(vector)
        for j in range(len(v)):
            q = v[j] // self._rows[j][j]
            if q:
                v = self._reduce_tail([a - q * b for a, b in zip(v, self._rows[j])], j + 1)
        return tuple(v)

    @property
    def order(self) -> int:
        return prod(d // self._rows[j][j] for j, d in enumerate(self.space.moduli))

    def pivot_rows(self) -> List[Vector]:
        return [tuple(row) for row in self._rows]

    def generators(self) -> List[Vector]:
        seen = []
        for row in self._rows:
            vector = self.space.reduce(row)
            if any(vector) and vector not in seen:
                seen.append(vector)
        return seen

    def elements(self) -> List[Vector]:
        """All elements in index order; only sensible for small subgroups."""
        quotient = Subquotient(self, Subgroup(self.space))
        return sorted(quotient.representative(c) for c in quotient.structure.elements())

    def join(self, other: "Subgroup") -> "Subgroup":
        if other.space.moduli != self.space.moduli:
            raise DimensionMismatch("subgroups of different spaces")
        return Subgroup(self.space, self.generators() + other.generators())

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return all(other.contains(g) for g in self.generators())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return (
            self.space.moduli == other.space.moduli
            and self.is_subgroup_of(other)
            and other.is_subgroup_of(self)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, space={self.space.moduli})"


class Subquotient:
    """
    The quotient upper / lower of two subgroups lower <= upper of one space,
    presented in invariant factor form with explicit coordinates.
    """

    def __init__(self, upper: Subgroup, lower: Subgroup) -> None:
        if upper.space.moduli != lower.space.moduli:
            raise DimensionMismatch("subquotient of subgroups in different spaces")
        if not lower.is_subgroup_of(upper):
            raise DimensionMismatch("the lower subgroup is not contained in the upper one")
        self.upper = upper
        self.lower = lower
        n = upper.space.rank
        relations = [self._upper_coefficients(row) for row in lower._rows]
        smith, _, _, v, v_inv = _smith(relations, n, n)
        diagonal = [smith[i][i] for i in range(n)]
        self._keep = [i for i in range(n) if diagonal[i] != 1]
        self._v = v
        self._v_inv = v_inv
        self.structure = FgAbelianGroup(tuple(diagonal[i] for i in self._keep))

    def _upper_coefficients(self, vector: Sequence[int]) -> List[int]:
        """Solve a . P_upper = vector for the integer row a."""
        rows = self.upper._rows
        rest = [int(x) for x in vector]
        coefficients = []
        for k, row in enumerate(rows):
            p = row[k]
            if rest[k] % p:
                raise DimensionMismatch("element outside the upper subgroup", tuple(vector))
            q = rest[k] // p
            coefficients.append(q)
            if q:
                rest = [a - q * b for a, b in zip(rest, row)]
        return coefficients

    @property
    def order(self) -> int:
        return self.structure.order

    def coordinates(self, vector: Sequence[int]) -> Vector:
        """Class coordinates of an element of the upper subgroup."""
        a = self._upper_coefficients(self.upper._lift(vector))
        image = [sum(a[i] * self._v[i][j] for i in range(len(a))) for j in self._keep]
        return self.structure.reduce(image)

    def representative(self, coords: Sequence[int]) -> Vector:
        """An element of the upper subgroup with the given class coordinates."""
        coords = self.structure.reduce(coords)
        n = self.upper.space.rank
        a = [0] * n
        for c, i in zip(coords, self._keep):
            if c:
                a = [x + c * y for x, y in zip(a, self._v_inv[i])]
        element = [0] * n
        for coefficient, row in zip(a, self.upper._rows):
            if coefficient:
                element = [x + coefficient * y for x, y in zip(element, row)]
        return self.upper.space.reduce(element)

    def least_representative(self, coords: Sequence[int]) -> Vector:
        return self.lower.reduce(self.representative(coords))

    def generators(self) -> List[Vector]:
        return [self.representative(e) for e in self.structure.basis()]


# -----------------------------------------------------------------------------
# Homomorphisms
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class AbelianHom:
    """
    A homomorphism source -> target; column j of `matrix` is the image of e_j.
    """
    source: CoordinateSpace
    target: CoordinateSpace
    matrix: IntMatrix

    def __post_init__(self) -> None:
        if (self.matrix.rows, self.matrix.cols) != (self.target.rank, self.source.rank):
            raise DimensionMismatch(
                f"{self.matrix.rows}x{self.matrix.cols} matrix for a map of rank "
                f"{self.source.rank} -> {self.target.rank}"
            )
        for j, d in enumerate(self.source.moduli):
            if any(self.target.reduce(d * c for c in self.matrix.column(j))):
                raise DimensionMismatch(f"column {j} does not respect the source relation", j)

    @classmethod
    def from_function(
        cls,
        source: CoordinateSpace,
        target: CoordinateSpace,
        fn: Callable[[Vector], Sequence[int]],
    ) -> "AbelianHom":
        """Matrix of an additive map, read off the images of the basis."""
        columns = [target.reduce(fn(e)) for e in source.basis()]
        rows = [[col[i] for col in columns] for i in range(target.rank)]
        return cls(source, target, IntMatrix.from_rows(rows, source.rank))

    def __call__(self, vector: Sequence[int]) -> Vector:
        return self.target.reduce(self.matrix.apply(self.source.reduce(vector)))

    def compose(self, inner: "AbelianHom") -> "AbelianHom":
        """self after inner."""
        if inner.target.moduli != self.source.moduli:
            raise DimensionMismatch("composition of maps with mismatched ends")
        product_matrix = self.matrix @ inner.matrix
        rows = [list(self.target.reduce(row)) for row in product_matrix.transpose().to_rows()]
        return AbelianHom(
            inner.source,
            self.target,
            IntMatrix.from_rows(rows, self.target.rank).transpose(),
        )

    def columns(self) -> List[Vector]:
        return [self.target.reduce(self.matrix.column(j)) for j in range(self.source.rank)]

    @cached_property
    def _graph(self) -> Subgroup:
        # lattice of (f(x), x) with target coordinates first
        space = CoordinateSpace(self.target.moduli + self.source.moduli)
        generators = []
        for j, column in enumerate(self.columns()):
            unit = tuple(int(i == j) for i in range(self.source.rank))
            vector = space.reduce(column + unit)
            if any(vector) and vector not in generators:
                generators.append(vector)
        logger.debug("graph lattice of rank %d from %d generators", space.rank, len(generators))
        return Subgroup(space, generators)

    def kernel(self) -> Subgroup:
        m = self.target.rank
        rows = [row[m:] for row in self._graph._rows[m:]]
        return Subgroup._from_rows(self.source, rows)

    def image(self) -> Subgroup:
        return Subgroup(self.target, self.columns())

    def solve(self, vector: Sequence[int]) -> Optional[Vector]:
        """Some x with f(x) = vector, or None when vector is not in the image."""
        m = self.target.rank
        graph = self._graph
        v = list(self.target.reduce(vector)) + [0] * self.source.rank
        for j in range(m):
            x = v[j]
            if x == 0:
                continue
            row = graph._rows[j]
            if x % row[j]:
                return None
            q = x // row[j]
            v = graph._reduce_tail([a - q * b for a, b in zip(v, row)], j + 1)
        return self.source.neg(v[m:])


def hom_kernel(f: AbelianHom) -> Tuple[FgAbelianGroup, AbelianHom]:
    """Kernel in invariant factor form with its inclusion into the source."""
    quotient = Subquotient(f.kernel(), Subgroup(f.source))
    inclusion = AbelianHom.from_function(
        quotient.structure, f.source, quotient.representative
    )
    return quotient.structure, inclusion


def hom_image(f: AbelianHom) -> Tuple[FgAbelianGroup, AbelianHom]:
    """Image in invariant factor form with its inclusion into the target."""
    quotient = Subquotient(f.image(), Subgroup(f.target))
    inclusion = AbelianHom.from_function(
        quotient.structure, f.target, quotient.representative
    )
    return quotient.structure, inclusion


def quotient_invariants(
    generators: Iterable[Sequence[int]],
    ambient: CoordinateSpace,
) -> Tuple[FgAbelianGroup, AbelianHom]:
    """ambient / <generators> with the (surjective) projection."""
    sub = Subgroup(ambient, generators)
    quotient = Subquotient(Subgroup.whole(ambient), sub)
    projection = AbelianHom.from_function(ambient, quotient.structure, quotient.coordinates)
    return quotient.structure, projection


# -----------------------------------------------------------------------------
# Cayley tables
# -----------------------------------------------------------------------------
def table_failures(table: Table, *, commutative: bool = False) -> List[Tuple[str, Tuple[int, ...]]]:
    """
    Failed group axioms of a Cayley table with identity required at index 0.

    Each entry is (axiom, witness). Checks stop at the first witness per axiom;
    structural failures (shape, closure) stop everything.
    """
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        return [("square", (n,))]
    for a in range(n):
        for b in range(n):
            if not 0 <= table[a][b] < n:
                return [("closure", (a, b))]

    failures: List[Tuple[str, Tuple[int, ...]]] = []
    bad_identity = next((a for a in range(n) if table[0][a] != a or table[a][0] != a), None)
    if bad_identity is not None:
        failures.append(("identity", (bad_identity,)))

    bad_assoc = next(
        (
            (a, b, c)
            for a in range(n)
            for b in range(n)
            for c in range(n)
            if table[table[a][b]][c] != table[a][table[b][c]]
        ),
        None,
    )
    if bad_assoc is not None:
        failures.append(("associativity", bad_assoc))

    bad_inverse = next(
        (a for a in range(n) if not any(table[a][b] == 0 and table[b][a] == 0 for b in range(n))),
        None,
    )
    if bad_inverse is not None:
        failures.append(("inverses", (bad_inverse,)))

    if commutative:
        bad_comm = next(
            ((a, b) for a in range(n) for b in range(a + 1, n) if table[a][b] != table[b][a]),
            None,
        )
        if bad_comm is not None:
            failures.append(("commutativity", bad_comm))
    return failures


def decompose_abelian(table: Table) -> Tuple[FgAbelianGroup, Tuple[int, ...]]:
    """
    Invariant factors of a finite abelian group given by its Cayley table
    (identity at 0), with the isomorphism as a map carrier index -> element
    index of the canonical coordinate group.
    """
    failures = table_failures(table, commutative=True)
    for axiom, witness in failures:
        if axiom == "identity":
            raise IdentityNotZero("index 0 is not the identity of the table", witness)
        if axiom == "commutativity":
            raise NotAbelian("the table is not commutative", witness)
        raise NotAGroup(f"the table fails {axiom}", witness)

    n = len(table)
    space = CoordinateSpace((n,) * n)

    def unit(a: int) -> List[int]:
        return [int(i == a) for i in range(n)]

    relations = [unit(0)]
    for a in range(n):
        for b in range(a, n):
            relation = unit(a)
            relation[b] += 1
            relation[table[a][b]] -= 1
            relations.append(relation)

    quotient = Subquotient(Subgroup.whole(space), Subgroup(space, relations))
    group = quotient.structure
    iso = tuple(group.index_of(quotient.coordinates(unit(a))) for a in range(n))
    logger.debug("decomposed a table of order %d as %s", n, group.label())
    return group, iso
