# bracekit/catalog.py
"""
Shipped catalog entries, built in code.

Responsibilities:
- Trivial braces Z/n for n <= 8 and the small modules used by the examples.
- The worked action pairs over H = Z/2, I = (Z/2)^2: the amended pair, the
  trivial pair and the pair as literally printed (which is not an action pair).
- The Z/3 inversion pair (a valid action pair that is not good).
- The cocycle sets of both worked pairs, named by the I-indices of
  beta(1, 1) and tau(1, 1).
- A 4x4 table pair that is not a brace.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .actions import ActionPair
from .algebra import FgAbelianGroup
from .brace import FiniteBrace
from .cohomology import Cocycle2

MAX_TRIVIAL_ORDER = 8

MODULES: Dict[str, Tuple[int, ...]] = {
    "Z1": (),
    "Z2": (2,),
    "Z3": (3,),
    "Z4": (4,),
    "Z2xZ2": (2, 2),
    "Z2xZ2xZ2": (2, 2, 2),
}

AMENDED_NOTE = (
    "nu_1(a, b) = (a + b, b), sigma_1(a, b) = (a, a + b); nu_0 and sigma_0 are the identity. "
    "As printed, the formulas read nu_h(a, b) = (a + b + h, b) and sigma_h(a, b) = (a, b + a + h), "
    "which do not fix 0 at h = 0."
)


def module(name: str) -> FgAbelianGroup:
    return FgAbelianGroup.of(MODULES[name])


def trivial_braces() -> Dict[str, FiniteBrace]:
    return {f"Z{n}": FiniteBrace.trivial(n) for n in range(1, MAX_TRIVIAL_ORDER + 1)}


# -----------------------------------------------------------------------------
# Action pairs
# -----------------------------------------------------------------------------
def worked_amended_pair() -> ActionPair:
    H, I = FiniteBrace.trivial(2), module("Z2xZ2")

    def nu(h, y):
        a, b = y
        return (a + h * b, b)

    def sigma(h, y):
        a, b = y
        return (a, b + h * a)

    return ActionPair.from_functions(H, I, nu, sigma, name="worked_amended")


def worked_trivial_pair() -> ActionPair:
    return ActionPair.trivial(FiniteBrace.trivial(2), module("Z2xZ2"), name="worked_trivial")


def worked_literal_pair() -> ActionPair:
    """Fails nu_identity: nu_0 moves (0, 1)."""
    H, I = FiniteBrace.trivial(2), module("Z2xZ2")
    return ActionPair.from_functions(
        H,
        I,
        lambda h, y: (y[0] + y[1] + h, y[1]),
        lambda h, y: (y[0], y[1] + y[0] + h),
        name="worked_literal",
    )


def z3_inversion_pair() -> ActionPair:
    """nu_1(y) = -y on Z/3, sigma trivial: an action pair that is not good."""
    return ActionPair.from_functions(
        FiniteBrace.trivial(2),
        module("Z3"),
        lambda h, y: (-y[0] if h else y[0],),
        lambda h, y: y,
        name="z3_inversion",
    )


def z6_trivial_pair() -> ActionPair:
    return ActionPair.trivial(FiniteBrace.trivial(6), module("Z2"), name="z6_trivial")


def action_pairs() -> Dict[str, ActionPair]:
    pairs = [worked_amended_pair(), worked_trivial_pair(), worked_literal_pair(), z3_inversion_pair(), z6_trivial_pair()]
    return {A.name: A for A in pairs}


# -----------------------------------------------------------------------------
# Cocycles
# -----------------------------------------------------------------------------
def cocycle_name(A: ActionPair, beta: int, tau: int) -> str:
    return f"{A.name}_beta{beta}_tau{tau}"


def pair_cocycle(A: ActionPair, beta: int, tau: int) -> Cocycle2:
    """The cocycle supported on (1, 1) of an H = Z/2 pair, values given as I-indices."""
    return Cocycle2.from_values(A, {(1, 1): A.I.coords_of(beta)}, {(1, 1): A.I.coords_of(tau)})


def worked_cocycles() -> Dict[str, Tuple[ActionPair, Cocycle2]]:
    """
    Amended pair: Z2_N = {beta, tau in {0, (1, 0)} x {0, (0, 1)}}.
    Trivial pair: every (beta(1, 1), tau(1, 1)).
    """
    amended, trivial = worked_amended_pair(), worked_trivial_pair()
    entries: Dict[str, Tuple[ActionPair, Cocycle2]] = {}
    for beta in (0, 2):
        for tau in (0, 1):
            entries[cocycle_name(amended, beta, tau)] = (amended, pair_cocycle(amended, beta, tau))
    for beta in range(trivial.I.order):
        for tau in range(trivial.I.order):
            entries[cocycle_name(trivial, beta, tau)] = (trivial, pair_cocycle(trivial, beta, tau))
    return entries


# -----------------------------------------------------------------------------
# Counterexamples
# -----------------------------------------------------------------------------
def relabelled_z4_tables() -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]:
    """
    + of Z/4 with the multiplication of Z/4 transported along the swap 1 <-> 2.
    Both are groups but the compatibility law fails.
    """
    swap = (0, 2, 1, 3)
    add = tuple(tuple((a + b) % 4 for b in range(4)) for a in range(4))
    circ = tuple(tuple(swap[(swap[a] + swap[b]) % 4] for b in range(4)) for a in range(4))
    return add, circ
