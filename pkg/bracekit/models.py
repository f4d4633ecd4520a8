# bracekit/models.py
"""
Pydantic models for everything that is read from or written to disk:
- the input documents (brace, module, action, cocycle, extension files),
- the reports emitted by validation and by the heavier computations.

The algebraic objects themselves (FiniteBrace, ActionPair, ...) are plain
dataclasses; file_gateway converts between the two.
"""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field, model_validator


# -----------------------------------------------------------------------------
# Input documents
# -----------------------------------------------------------------------------
class BraceFile(BaseModel):
    """
    A brace as two Cayley tables on {0, ..., order-1}; identity at 0.
    """
    name: Optional[str] = Field(None, description="Catalog label")
    order: int = Field(..., ge=1, description="Size of the carrier")
    add: List[List[int]] = Field(..., description="Cayley table of +")
    circ: List[List[int]] = Field(..., description="Cayley table of the multiplicative group")

    @model_validator(mode="after")
    def _square_tables(self) -> "BraceFile":
        for label, table in (("add", self.add), ("circ", self.circ)):
            if len(table) != self.order or any(len(row) != self.order for row in table):
                raise ValueError(f"{label} must be a {self.order}x{self.order} table")
        return self


class ModuleFile(BaseModel):
    """
    The abelian group I, either by invariant factors or by an addition table.
    """
    name: str
    invariant_factors: Optional[List[int]] = None
    add: Optional[List[List[int]]] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "ModuleFile":
        if (self.invariant_factors is None) == (self.add is None):
            raise ValueError("give exactly one of invariant_factors or add")
        return self


class ActionFile(BaseModel):
    """
    nu and sigma as one permutation of I-indices per element of H.
    """
    name: Optional[str] = None
    brace: str = Field(..., description="Name of the brace H")
    module: str = Field(..., description="Name of the module I")
    nu: List[List[int]]
    sigma: List[List[int]]
    note: Optional[str] = Field(None, description="Free text, e.g. provenance of the formulas")


class CochainEntry(BaseModel):
    args: List[int] = Field(..., description="Arguments (h1, h2, ...)")
    value: List[int] = Field(..., description="I-coordinates of the value")


class CocycleFile(BaseModel):
    """
    A pair (beta, tau) over nondegenerate pairs; omitted entries are zero.
    """
    name: Optional[str] = None
    brace: str
    module: str
    actions: str
    beta: List[CochainEntry] = Field(default_factory=list)
    tau: List[CochainEntry] = Field(default_factory=list)


class ExtensionFile(BaseModel):
    """
    An extension 0 -> I -> E -> H -> 0 with optional st-section.
    """
    name: Optional[str] = None
    brace: BraceFile
    ideal: List[int] = Field(..., description="E-indices of iota(y) in I-index order")
    proj: List[int] = Field(..., description="H-index of every element of E")
    section: Optional[List[int]] = Field(None, description="E-index of s(h) for every h")
    base: Optional[BraceFile] = Field(None, description="H; recovered as E/I when omitted")
    module: Optional[List[int]] = Field(None, description="Invariant factors of I")


# -----------------------------------------------------------------------------
# Reports
# -----------------------------------------------------------------------------
class AxiomFailure(BaseModel):
    axiom: str
    witness: List[int] = Field(default_factory=list)
    detail: Optional[str] = None


class ValidationReport(BaseModel):
    """
    Outcome of a verify_* operation. Every failed axiom is listed once,
    with the first witness found.
    """
    subject: str
    valid: bool
    failures: List[AxiomFailure] = Field(default_factory=list)

    @classmethod
    def from_failures(cls, subject: str, failures: List[AxiomFailure]) -> "ValidationReport":
        return cls(subject=subject, valid=not failures, failures=failures)

    def failed_axioms(self) -> List[str]:
        return [f.axiom for f in self.failures]


class CohomologyReport(BaseModel):
    brace: str
    module: str
    actions: str
    degree: int
    restricted: bool = False
    invariant_factors: List[int]
    order: int
    cycles_order: int
    boundaries_order: int
    representatives: List[List[int]] = Field(
        default_factory=list, description="Least representative vector of every class"
    )
    oracle_checked: bool = False


class MorphismEntry(BaseModel):
    table: List[int]


class AutomorphismReport(BaseModel):
    brace: str
    order: int = Field(..., description="Size of Autb(E)")
    automorphisms: List[MorphismEntry]


class GoodPairReport(BaseModel):
    actions: ValidationReport
    good: bool
    witness: Optional[List[int]] = Field(None, description="(h1, h2, y) where the good-pair law fails")


class YbeReport(BaseModel):
    brace: str
    solution: List[List[List[int]]] = Field(..., description="r(x, y) for every x, y")
    check: ValidationReport


class CompatiblePairEntry(BaseModel):
    phi: List[int]
    theta: List[int]


class WellsReport(BaseModel):
    extension: str
    compatible_pairs: List[CompatiblePairEntry]
    multiplication: List[List[int]]
    omega: List[List[int]] = Field(..., description="Class coordinates of omega(c) per pair")
    inducible: List[int] = Field(..., description="Indices of the pairs in Ker omega")
    restriction_image: List[int] = Field(..., description="Indices of the pairs in Im rho")
    autb_normalizing_order: int
    autb_kernel_order: int
    derivations_order: int
    exact_at_kernel: bool
    exact_at_image: bool
    derivation_law: bool
    omega_is_homomorphism: bool
    eta_verified: bool


class PrimeVerdictEntry(BaseModel):
    prime: int
    sylow: List[int]
    inducible: bool
    square_commutes: bool


class SylowReport(BaseModel):
    pair: CompatiblePairEntry
    primes: List[PrimeVerdictEntry]
    global_inducible: bool
    implication_holds: bool
    converse_holds: bool
    converse_is_extrapolation: bool = True


class InducibilityReport(BaseModel):
    pair: CompatiblePairEntry
    inducible: bool
    omega_zero: bool
    direct_search: bool
    module_criterion: List[bool]
    agree: bool
    witness: Optional[List[int]] = None
    obstruction: Optional[List[int]] = None
    sylow: Optional[SylowReport] = None


class EquivalenceReport(BaseModel):
    equivalent: bool
    reason: str
    morphism: Optional[List[int]] = None
    theta: Optional[List[List[int]]] = None
    oracle_checked: bool = False
