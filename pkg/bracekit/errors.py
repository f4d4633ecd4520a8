# bracekit/errors.py
"""
Exception hierarchy.

Every error raised by the library derives from BraceKitError and carries:
- a human-readable message,
- an optional witness (tuple of carrier indices, a cochain tuple, ...),
- a class-level exit_code used by the CLI.

Validation operations (verify_brace, verify_action_pair, is_good_pair, ...)
report failures instead of raising; these classes cover the operations whose
preconditions are violated.
"""

from __future__ import annotations

from typing import Any, Optional


class BraceKitError(Exception):
    exit_code: int = 10

    def __init__(self, message: str, witness: Optional[Any] = None) -> None:
        super().__init__(message)
        self.message = message
        self.witness = witness

    def __str__(self) -> str:
        if self.witness is None:
            return self.message
        return f"{self.message} (witness: {self.witness})"


# -----------------------------------------------------------------------------
# algebra
# -----------------------------------------------------------------------------
class NotAGroup(BraceKitError):
    exit_code = 11


class NotAbelian(BraceKitError):
    exit_code = 12


class IdentityNotZero(BraceKitError):
    exit_code = 13


class DimensionMismatch(BraceKitError):
    exit_code = 14


# -----------------------------------------------------------------------------
# braces
# -----------------------------------------------------------------------------
class IndexOutOfRange(BraceKitError):
    exit_code = 15


class OrderTooLarge(BraceKitError):
    exit_code = 16


class NotAnIdeal(BraceKitError):
    exit_code = 17


class PrimeDoesNotDivideOrder(BraceKitError):
    exit_code = 18


class NotABrace(BraceKitError):
    exit_code = 19


# -----------------------------------------------------------------------------
# actions
# -----------------------------------------------------------------------------
class InvalidActionPair(BraceKitError):
    exit_code = 20


class IdealNotTrivialBrace(BraceKitError):
    exit_code = 21


class NotAnAutomorphism(BraceKitError):
    exit_code = 22


# -----------------------------------------------------------------------------
# cohomology
# -----------------------------------------------------------------------------
class NotInFixedSubgroup(BraceKitError):
    exit_code = 23


class NotNormalized(BraceKitError):
    exit_code = 24


class NotInC2N(BraceKitError):
    exit_code = 25


class NotGoodPair(BraceKitError):
    exit_code = 26


class NotACocycle(BraceKitError):
    exit_code = 27


class IncompatiblePair(BraceKitError):
    exit_code = 28


class NotALeftIdeal(BraceKitError):
    exit_code = 29


# -----------------------------------------------------------------------------
# extensions / wells
# -----------------------------------------------------------------------------
class MismatchedEnds(BraceKitError):
    exit_code = 30


class NotAutomorphisms(BraceKitError):
    exit_code = 31


class NotCompatible(BraceKitError):
    exit_code = 32


class DoesNotNormalizeIdeal(BraceKitError):
    exit_code = 33


class NotAdditivelySplit(BraceKitError):
    exit_code = 34


class SylowNotPreserved(BraceKitError):
    exit_code = 35


# -----------------------------------------------------------------------------
# cli
# -----------------------------------------------------------------------------
class ParseError(BraceKitError):
    exit_code = 40


class CrossReferenceError(BraceKitError):
    exit_code = 41


class OracleMismatch(BraceKitError):
    exit_code = 42


class UsageError(BraceKitError):
    """Bad command line: unknown flags, missing inputs, non-positive bounds."""
    exit_code = 2
