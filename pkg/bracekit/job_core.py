# bracekit/job_core.py
"""
JobCore

The engine behind every command-line invocation.

Responsibilities:
- Resolve the inputs of a JobConfig (file paths or catalog names) through
  the FileGateway and the CatalogStore, checking cross references.
- Apply per-job search bounds on top of the environment settings.
- Route the command to its handler (cmd_*), which calls the library and
  fills the JobContext with a human-readable report and structured documents.
- Write the queued documents once the handler has finished.

This module does NOT:
- Parse argv (that happens in command_router.py).
- Map exceptions to exit codes (app.py does that).
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Type

from pydantic import BaseModel

from .actions import ActionPair, is_good_pair, verify_action_pair
from .brace import (
    FiniteBrace,
    brace_automorphisms,
    check_lambda_identities,
    check_ybe,
    verify_brace,
    ybe_solution,
)
from .catalog_store import CatalogStore
from .cohomology import (
    CohomologyGroup,
    brace_complex,
    h1,
    h2,
    oracle_b2,
    oracle_z1,
    oracle_z2,
    rh2,
    z1,
)
from .config import overridden, settings
from .cross_reference import CrossReferenceChecker
from .enumeration import enumerate_braces
from .errors import IndexOutOfRange, OracleMismatch, UsageError
from .extensions import Extension, build_extension, classify_extensions, equivalence_report
from .file_gateway import (
    FileGateway,
    actions_from_file,
    brace_from_file,
    brace_to_file,
    cocycle_from_file,
    extension_from_file,
    extension_to_file,
    module_from_file,
)
from .job_context import JobConfig, JobContext
from .models import (
    ActionFile,
    AutomorphismReport,
    BraceFile,
    CocycleFile,
    GoodPairReport,
    ModuleFile,
    MorphismEntry,
    ValidationReport,
    YbeReport,
)
from .wells import CompatiblePair, is_inducible, sylow_reduction, wells_map, wells_report

logger = logging.getLogger(__name__)


def _describe(report: ValidationReport) -> List[str]:
    if report.valid:
        return [f"{report.subject}: valid"]
    lines = [f"{report.subject}: INVALID"]
    for failure in report.failures:
        detail = f" ({failure.detail})" if failure.detail else ""
        lines.append(f"  {failure.axiom} fails at {tuple(failure.witness)}{detail}")
    return lines


def _cochain_text(group: CohomologyGroup, vector) -> str:
    element = group.complex.from_vector(group.degree, vector)
    if group.degree == 1:
        parts = [f"theta{args}={value}" for args, value in element.entries()]
    else:
        parts = [f"beta{args}={value}" for args, value in element.beta.entries()]
        parts += [f"tau{args}={value}" for args, value in element.tau.entries()]
    return ", ".join(parts) or "0"


class JobCore:
    """
    Create once with its collaborators and call run() per job.
    """

    def __init__(
        self,
        store: CatalogStore,
        gateway: FileGateway,
        checker: CrossReferenceChecker,
    ) -> None:
        self.store = store
        self.gateway = gateway
        self.checker = checker
        self.handlers: Dict[str, Callable[[JobContext], None]] = {
            "verify": self.cmd_verify,
            "autb": self.cmd_autb,
            "goodpair": self.cmd_goodpair,
            "cohomology": self.cmd_cohomology,
            "extend": self.cmd_extend,
            "classify": self.cmd_classify,
            "equiv": self.cmd_equiv,
            "wells": self.cmd_wells,
            "inducible": self.cmd_inducible,
            "enumerate": self.cmd_enumerate,
            "ybe": self.cmd_ybe,
            "export-catalog": self.cmd_export_catalog,
        }

    # -------------------------------------------------------------------------
    # Public API
    # -------------------------------------------------------------------------
    def run(self, config: JobConfig) -> JobContext:
        """
        Flow:
        - Layer a catalog directory over the built-ins if one is given.
        - Apply the per-job bounds.
        - Route to the handler.
        - Write the queued documents.
        """
        ctx = JobContext(config=config)
        if config.catalog_dir is not None:
            count = self.store.load_dir(config.catalog_dir, self.gateway)
            logger.info("loaded %d catalog documents from %s", count, config.catalog_dir)

        with overridden(
            MAX_AUTOMORPHISM_ORDER=config.max_automorphism_order,
            MAX_ENUMERATION_ORDER=config.max_enumeration_order,
            MAX_BRUTE_FORCE=config.max_brute_force,
        ):
            self.handlers[config.command](ctx)

        for path, document in ctx.documents:
            self.gateway.write(path, document)
        return ctx

    # -------------------------------------------------------------------------
    # Input resolution
    # -------------------------------------------------------------------------
    def _document(self, kinds: Tuple[str, ...], ref: str, model: Type[BaseModel]) -> BaseModel:
        """A file when `ref` is an existing path, else a catalog entry of one of `kinds`."""
        if Path(ref).is_file():
            return self.gateway.read(Path(ref), model)
        for kind in kinds:
            document = self.store.load(kind, ref)
            if document is not None:
                return document
        return self.store.get(kinds[0], ref)

    def _brace(self, ref: Optional[str]) -> Tuple[BraceFile, FiniteBrace]:
        if ref is None:
            raise UsageError("a brace is required")
        doc = self._document(("brace", "counterexample"), ref, BraceFile)
        return doc, brace_from_file(doc)

    def _actions(self, ctx: JobContext) -> ActionPair:
        config = ctx.config
        if config.entry is not None:
            actions_doc = self.store.get("actions", config.entry)
            brace_ref = config.brace or actions_doc.brace
            module_ref = config.module or actions_doc.module
        else:
            if not (config.brace and config.module and config.actions):
                raise UsageError("give --entry or all of --brace, --module and --actions")
            actions_doc = self._document(("actions",), config.actions, ActionFile)
            brace_ref, module_ref = config.brace, config.module

        brace_doc, H = self._brace(brace_ref)
        module_doc = self._document(("module",), module_ref, ModuleFile)
        self.checker.check_actions(actions_doc, brace_doc.name, module_doc.name)
        I, relabel = module_from_file(module_doc)
        if config.trivial_actions:
            return ActionPair.trivial(H, I, name="trivial actions")
        return actions_from_file(actions_doc, H, I, relabel)

    def _extension(self, ref: str) -> Extension:
        return extension_from_file(self.gateway.read_extension(Path(ref)))

    def _output(self, ctx: JobContext, document: BaseModel) -> None:
        if ctx.config.output is not None:
            ctx.attach(ctx.config.output, document)

    def _oracle(self, ctx: JobContext) -> bool:
        return ctx.config.oracle or settings.ORACLE

    # -------------------------------------------------------------------------
    # Handlers: braces
    # -------------------------------------------------------------------------
    def cmd_verify(self, ctx: JobContext) -> None:
        if ctx.config.brace is None:
            raise UsageError("verify needs a brace")
        doc = self._document(("brace", "counterexample"), ctx.config.brace, BraceFile)
        report = verify_brace(doc.add, doc.circ)
        for line in _describe(report):
            ctx.emit(line)
        if report.valid:
            lam = check_lambda_identities(brace_from_file(doc, check=False))
            ctx.emit(f"lambda identities: {'hold' if lam.valid else 'FAIL'}")
        else:
            ctx.fail()
        self._output(ctx, report)

    def cmd_autb(self, ctx: JobContext) -> None:
        _, E = self._brace(ctx.config.brace)
        autos = brace_automorphisms(E)
        ctx.emit(f"Autb({E.label()}) has order {len(autos)}")
        for gamma in autos:
            ctx.emit(f"  {list(gamma.table)}")
        self._output(
            ctx,
            AutomorphismReport(
                brace=E.label(), order=len(autos), automorphisms=[MorphismEntry(table=list(g.table)) for g in autos]
            ),
        )

    def cmd_enumerate(self, ctx: JobContext) -> None:
        n = ctx.config.order
        braces = enumerate_braces(n)
        ctx.emit(f"{len(braces)} braces of order {n}")
        for E in braces:
            kind = "trivial" if E.is_trivial() else "non-trivial"
            ctx.emit(f"  {E.name}: {kind}")
            if ctx.config.output is not None:
                ctx.attach(ctx.config.output / f"{E.name}.json", brace_to_file(E))

    def cmd_ybe(self, ctx: JobContext) -> None:
        _, E = self._brace(ctx.config.brace)
        solution = ybe_solution(E)
        check = check_ybe(solution)
        table = solution.table()
        ctx.emit(f"r on {E.label()}:")
        for x, row in enumerate(table):
            ctx.emit(f"  {x}: " + " ".join(f"{u},{v}" for u, v in row))
        for line in _describe(check):
            ctx.emit(line)
        if not check.valid:
            ctx.fail()
        self._output(
            ctx,
            YbeReport(brace=E.label(), solution=[[list(p) for p in row] for row in table], check=check),
        )

    # -------------------------------------------------------------------------
    # Handlers: actions and cohomology
    # -------------------------------------------------------------------------
    def cmd_goodpair(self, ctx: JobContext) -> None:
        A = self._actions(ctx)
        validation = verify_action_pair(A)
        for line in _describe(validation):
            ctx.emit(line)
        if not validation.valid:
            ctx.fail()
            self._output(ctx, GoodPairReport(actions=validation, good=False))
            return
        good, witness = is_good_pair(A)
        if good:
            ctx.emit(f"{A.label()}: good pair")
        else:
            ctx.emit(f"{A.label()}: NOT a good pair, fails at (h1, h2, y) = {witness}")
            ctx.fail()
        self._output(
            ctx, GoodPairReport(actions=validation, good=good, witness=list(witness) if witness else None)
        )

    def _oracle_cohomology(self, A: ActionPair, degree: int) -> None:
        cx = brace_complex(A)
        if degree == 1:
            found = {cx.cochain1_to_vector(theta) for theta in oracle_z1(A)}
            if found != set(z1(A).vectors()):
                raise OracleMismatch("Z1_N differs from the enumerated derivations")
            return
        if set(oracle_z2(A)) != set(cx.z2.elements()):
            raise OracleMismatch("Z2_N differs from the enumerated cocycles")
        if set(oracle_b2(A)) != set(cx.b2.elements()):
            raise OracleMismatch("B2_N differs from the enumerated coboundaries")

    def cmd_cohomology(self, ctx: JobContext) -> None:
        config = ctx.config
        A = self._actions(ctx)
        if config.degree == 1:
            group, title = h1(A), "H1_N"
            ctx.emit(f"Z1_N has order {z1(A).order}")
        elif config.restricted:
            group, title = rh2(A), "RH2_N"
        else:
            group, title = h2(A), "H2_N"
        if self._oracle(ctx):
            self._oracle_cohomology(A, config.degree)
            ctx.emit("oracle: enumeration agrees")

        ctx.emit(f"{title} ≅ {group.structure.label()} (order {group.order})")
        ctx.emit(f"invariant factors: {list(group.invariant_factors)}")
        report = group.report(oracle_checked=self._oracle(ctx))
        for k, vector in enumerate(report.representatives):
            ctx.emit(f"  [{k}] {_cochain_text(group, tuple(vector))}")
        self._output(ctx, report)

    # -------------------------------------------------------------------------
    # Handlers: extensions
    # -------------------------------------------------------------------------
    def cmd_extend(self, ctx: JobContext) -> None:
        A = self._actions(ctx)
        doc = self._document(("cocycle",), ctx.config.cocycle, CocycleFile)
        self.checker.check_cocycle(doc, A.H.name, None, A.name)
        X = build_extension(A, cocycle_from_file(doc, A), name=doc.name)
        ctx.emit(f"{X.label()}: brace of order {X.E.order}")
        ctx.emit(f"  I -> E: {list(X.iota.table)}")
        ctx.emit(f"  E -> H: {list(X.pi.table)}")
        self._output(ctx, extension_to_file(X))

    def cmd_classify(self, ctx: JobContext) -> None:
        A = self._actions(ctx)
        classified = classify_extensions(A)
        ctx.emit(f"{len(classified)} extension classes of {A.H.label()} by {A.I.label()}")
        for k, (coords, X) in enumerate(classified):
            verdict = verify_brace(X.E.add, X.E.circ)
            ctx.emit(f"  #{k} class {list(coords)}: order {X.E.order}, brace {'valid' if verdict.valid else 'INVALID'}")
            if ctx.config.output is not None:
                ctx.attach(ctx.config.output / f"class_{k}.json", extension_to_file(X))
        if self._oracle(ctx):
            for i, (_, first) in enumerate(classified):
                for second in [X for _, X in classified[i:]]:
                    equivalence_report(first, second, oracle=True)
            ctx.emit("oracle: theta enumeration agrees on every pair of classes")

    def cmd_equiv(self, ctx: JobContext) -> None:
        first, second = (self._extension(ref) for ref in ctx.config.extensions)
        report = equivalence_report(first, second, oracle=self._oracle(ctx))
        ctx.emit(f"equivalent: {report.equivalent} ({report.reason})")
        if report.morphism is not None:
            ctx.emit(f"  morphism: {report.morphism}")
        self._output(ctx, report)

    # -------------------------------------------------------------------------
    # Handlers: Wells sequence
    # -------------------------------------------------------------------------
    def cmd_wells(self, ctx: JobContext) -> None:
        X = self._extension(ctx.config.extensions[0])
        report = wells_report(X)
        ctx.emit(f"{report.extension}: |C_(nu,sigma)| = {len(report.compatible_pairs)}")
        for k, (pair, omega) in enumerate(zip(report.compatible_pairs, report.omega)):
            mark = "inducible" if k in report.inducible else "obstructed"
            ctx.emit(f"  [{k}] phi={pair.phi} theta={pair.theta} omega={omega} {mark}")
        ctx.emit(f"|Autb_I(E)| = {report.autb_normalizing_order}, |Autb^(H,I)(E)| = {report.autb_kernel_order}")
        ctx.emit(f"|Z1_N| = {report.derivations_order}, eta verified: {report.eta_verified}")
        ctx.emit(f"exact at Autb^(H,I)(E): {report.exact_at_kernel}; Im rho = Ker omega: {report.exact_at_image}")
        ctx.emit(f"derivation law: {report.derivation_law}; omega is a homomorphism: {report.omega_is_homomorphism}")
        if not (report.exact_at_kernel and report.exact_at_image and report.derivation_law):
            ctx.fail()
        self._output(ctx, report)

    def _pair(self, ctx: JobContext, X: Extension) -> CompatiblePair:
        config = ctx.config
        data = wells_map(X)
        if config.pair is not None:
            if config.pair >= len(data.pairs):
                raise IndexOutOfRange(f"pair {config.pair} of {len(data.pairs)}", (config.pair,))
            return data.pairs[config.pair]
        if config.phi is None or config.theta is None:
            raise UsageError("give --pair or both --phi and --theta")
        return CompatiblePair.from_tables(data.actions, config.phi, config.theta)

    def cmd_inducible(self, ctx: JobContext) -> None:
        X = self._extension(ctx.config.extensions[0])
        p = self._pair(ctx, X)
        report = is_inducible(X, p)
        ctx.emit(f"phi={report.pair.phi} theta={report.pair.theta}: inducible={report.inducible}")
        ctx.emit(
            f"  omega zero: {report.omega_zero}; direct search: {report.direct_search}; "
            f"module criterion: {report.module_criterion}"
        )
        if report.witness is not None:
            ctx.emit(f"  witness: {report.witness}")
        if report.obstruction is not None:
            ctx.emit(f"  obstruction: {report.obstruction}")
        if ctx.config.sylow:
            report.sylow = sylow_reduction(X, p)
            for verdict in report.sylow.primes:
                ctx.emit(f"  p={verdict.prime}: inducible={verdict.inducible} square commutes={verdict.square_commutes}")
            ctx.emit(f"  implication holds: {report.sylow.implication_holds}")
            ctx.emit(f"  converse holds: {report.sylow.converse_holds} (extrapolated)")
        if not report.agree:
            ctx.fail()
        self._output(ctx, report)

    # -------------------------------------------------------------------------
    # Handlers: catalog
    # -------------------------------------------------------------------------
    def cmd_export_catalog(self, ctx: JobContext) -> None:
        directory = ctx.config.output or Path("catalog")
        written = self.store.export(directory, self.gateway)
        ctx.emit(f"wrote {len(written)} documents to {directory}")
