# bracekit/complexes.py
"""
The cochain complexes C^n(H; I) in every degree and their relatives.

Responsibilities:
- Face maps and the alternating differential of C^n(H; I).
- Membership in RC^n (additive in the last argument) and RC^n_N.
- The embedding of beta = 0 brace 2-cocycles into group 2-cocycles of
  (H, o) with coefficients in I under the right action sigma.
- Group coboundaries and a brute-force cohomologous-ness test.
- Pushforward along compatible pairs and restriction to left ideals.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from .actions import ActionPair, is_compatible_pair
from .brace import BraceMorphism, BraceSubset, FiniteBrace, sub_brace
from .cohomology import Cochain, Cocycle2, all_normalized_cochains1, all_tuples, is_cocycle, signed_sum
from .errors import DimensionMismatch, IncompatiblePair, NotACocycle, NotALeftIdeal

logger = logging.getLogger(__name__)


def _product(H: FiniteBrace, args: Sequence[int]) -> int:
    result = 0
    for a in args:
        result = H.comp(result, a)
    return result


# -----------------------------------------------------------------------------
# Faces and the differential
# -----------------------------------------------------------------------------
def face(f: Cochain, i: int, A: ActionPair) -> Cochain:
    """
    The i-th face C^n -> C^{n+1}, 0 <= i <= n + 1:
      0:      nu_{h1} f(h2, ..., h_{n+1})
      i:      f(h1, ..., h_i o h_{i+1}, ..., h_{n+1})
      n + 1:  nu_{h1 o ... o h_{n+1}} sigma_{h_{n+1}} nu^-1_{h1 o ... o h_n} f(h1, ..., h_n)
    """
    n = f.arity
    if n < 1:
        raise DimensionMismatch("faces are defined from degree 1 on", (n,))
    if not 0 <= i <= n + 1:
        raise DimensionMismatch(f"face {i} of a {n}-cochain", (i,))
    H, nu, sigma, nu_inv = A.H, A.nu, A.sigma, A.nu_inv

    def value(*args: int) -> int:
        if i == 0:
            return nu[args[0]][f(*args[1:])]
        if i == n + 1:
            head = args[:n]
            return nu[_product(H, args)][sigma[args[n]][nu_inv[_product(H, head)][f(*head)]]]
        merged = args[: i - 1] + (H.comp(args[i - 1], args[i]),) + args[i + 1:]
        return f(*merged)

    return Cochain.from_function(H, f.I, n + 1, value)


def general_differential(f: Cochain, A: ActionPair) -> Cochain:
    """d^n f = sum over i of (-1)^i times the i-th face."""
    n = f.arity
    faces = [face(f, i, A) for i in range(n + 2)]
    values = []
    for position in range(len(faces[0].values)):
        plus = [faces[i].values[position] for i in range(0, n + 2, 2)]
        minus = [faces[i].values[position] for i in range(1, n + 2, 2)]
        values.append(signed_sum(f.I, plus, minus))
    return Cochain(f.H, f.I, n + 1, tuple(values))


def check_face_identity(f: Cochain, A: ActionPair, i: int, j: int) -> bool:
    """face_i(face_j(f)) == face_{j+1}(face_i(f)) for i <= j."""
    if i > j:
        raise DimensionMismatch("the face identity needs i <= j", (i, j))
    return face(face(f, j, A), i, A) == face(face(f, i, A), j + 1, A)


def is_in_rc(f: Cochain) -> bool:
    """Additive in the last argument."""
    H, I = f.H, f.I
    if f.arity < 1:
        return True
    for args in all_tuples(H, f.arity - 1):
        for a in H.elements:
            for b in H.elements:
                if f(*args, H.plus(a, b)) != I.plus(f(*args, a), f(*args, b)):
                    return False
    return True


def is_in_rc_normalized(f: Cochain) -> bool:
    return is_in_rc(f) and f.is_normalized()


# -----------------------------------------------------------------------------
# Group cohomology of (H, o)
# -----------------------------------------------------------------------------
def to_group_cocycle(tau: Cochain, A: ActionPair) -> Cochain:
    """
    f'(h1, h2) = nu^-1_{h1 o h2}(tau(h1, h2)) for a brace 2-cocycle (0, tau).
    """
    c = Cocycle2(Cochain.zero(A.H, A.I, 2, (0, 2)), tau, A)
    if not is_cocycle(c):
        raise NotACocycle("(0, tau) is not a brace 2-cocycle")
    H, nu_inv = A.H, A.nu_inv
    return Cochain.from_function(H, A.I, 2, lambda a, b: nu_inv[H.comp(a, b)][tau(a, b)])


def group_coboundary(c: Cochain, A: ActionPair) -> Cochain:
    """(delta c)(h1, h2) = c(h2) - c(h1 o h2) + sigma_{h2}(c(h1))."""
    H, I, sigma = A.H, A.I, A.sigma
    return Cochain.from_function(
        H, I, 2, lambda a, b: signed_sum(I, [c(b), sigma[b][c(a)]], [c(H.comp(a, b))])
    )


def is_group_cocycle(f: Cochain, A: ActionPair) -> bool:
    """f(h2, h3) - f(h1 o h2, h3) + f(h1, h2 o h3) - sigma_{h3}(f(h1, h2)) = 0."""
    H, I, sigma = A.H, A.I, A.sigma
    for a, b, c in all_tuples(H, 3):
        total = signed_sum(I, [f(b, c), f(a, H.comp(b, c))], [f(H.comp(a, b), c), sigma[c][f(a, b)]])
        if total:
            return False
    return True


def group_cohomologous(first: Cochain, second: Cochain, A: ActionPair) -> Optional[Cochain]:
    """A normalized 1-cochain c with delta c = first - second, by exhaustive search."""
    difference = first - second
    for c in all_normalized_cochains1(A):
        if group_coboundary(c, A) == difference:
            return c
    return None


# -----------------------------------------------------------------------------
# Functoriality
# -----------------------------------------------------------------------------
def pushforward(
    alpha: BraceMorphism,
    zeta: BraceMorphism,
    f: Cochain,
    A: ActionPair,
    A_prime: ActionPair,
) -> Cochain:
    """f'(h'1, ..., h'n) = zeta(f(alpha(h'1), ..., alpha(h'n)))."""
    if not is_compatible_pair(alpha, zeta, A, A_prime):
        raise IncompatiblePair("(alpha, zeta) is not compatible with the two action pairs")
    return Cochain.from_function(
        A_prime.H,
        A_prime.I,
        f.arity,
        lambda *args: zeta(f(*(alpha(a) for a in args))),
    )


def restrict_cochain(f: Cochain, K: BraceSubset) -> Cochain:
    """res^H_K: the values of f on K-tuples, K relabelled as a sub-brace."""
    if not K.is_left_ideal:
        raise NotALeftIdeal("restriction needs a left ideal", K.elements)
    sub, inclusion = sub_brace(f.H, K.elements, name=f"{f.H.label()}|K")
    logger.debug("restricting a %d-cochain to a left ideal of order %d", f.arity, sub.order)
    return Cochain.from_function(sub, f.I, f.arity, lambda *args: f(*(inclusion(a) for a in args)))
