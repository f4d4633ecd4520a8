# bracekit/file_gateway.py
"""
File Gateway

Encapsulates every read and write of a JSON document:
- brace, module, action, cocycle and extension files,
- reports emitted by the commands.

Keeping this separate lets the computational modules stay free of I/O and
centralizes parse errors: anything unreadable surfaces as ParseError.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from .actions import ActionPair
from .algebra import FgAbelianGroup, decompose_abelian
from .brace import FiniteBrace
from .cohomology import Cochain, Cocycle2
from .errors import ParseError
from .extensions import Extension, extension_from_parts
from .models import (
    ActionFile,
    BraceFile,
    CochainEntry,
    CocycleFile,
    ExtensionFile,
    ModuleFile,
)

logger = logging.getLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)


# -----------------------------------------------------------------------------
# Objects -> documents
# -----------------------------------------------------------------------------
def brace_to_file(E: FiniteBrace, name: Optional[str] = None) -> BraceFile:
    return BraceFile(
        name=name or E.name,
        order=E.order,
        add=[list(row) for row in E.add],
        circ=[list(row) for row in E.circ],
    )


def module_to_file(I: FgAbelianGroup, name: str) -> ModuleFile:
    return ModuleFile(name=name, invariant_factors=list(I.invariant_factors))


def actions_to_file(A: ActionPair, brace: str, module: str, note: Optional[str] = None) -> ActionFile:
    return ActionFile(
        name=A.name,
        brace=brace,
        module=module,
        nu=[list(p) for p in A.nu],
        sigma=[list(p) for p in A.sigma],
        note=note,
    )


def _entries(f: Cochain) -> List[CochainEntry]:
    return [CochainEntry(args=list(args), value=list(value)) for args, value in f.entries()]


def cocycle_to_file(c: Cocycle2, brace: str, module: str, actions: str, name: Optional[str] = None) -> CocycleFile:
    return CocycleFile(
        name=name,
        brace=brace,
        module=module,
        actions=actions,
        beta=_entries(c.beta),
        tau=_entries(c.tau),
    )


def extension_to_file(X: Extension) -> ExtensionFile:
    return ExtensionFile(
        name=X.name,
        brace=brace_to_file(X.E),
        ideal=list(X.iota.table),
        proj=list(X.pi.table),
        section=list(X.section),
        base=brace_to_file(X.H),
        module=list(X.I.invariant_factors),
    )


# -----------------------------------------------------------------------------
# Documents -> objects
# -----------------------------------------------------------------------------
def brace_from_file(doc: BraceFile, *, check: bool = True) -> FiniteBrace:
    return FiniteBrace.from_tables(doc.add, doc.circ, name=doc.name, check=check)


def module_from_file(doc: ModuleFile) -> Tuple[FgAbelianGroup, List[int]]:
    """
    The module and the relabelling of file indices into its element indices
    (the identity when the module is given by invariant factors).
    """
    if doc.invariant_factors is not None:
        I = FgAbelianGroup.of(doc.invariant_factors)
        return I, list(range(I.order))
    I, iso = decompose_abelian(doc.add)
    return I, list(iso)


def actions_from_file(doc: ActionFile, H: FiniteBrace, I: FgAbelianGroup, relabel: List[int]) -> ActionPair:
    def translate(table: List[List[int]], label: str) -> Tuple[Tuple[int, ...], ...]:
        if len(table) != H.order or any(len(row) != I.order for row in table):
            raise ParseError(f"{label} must list {H.order} permutations of {I.order} elements")
        perms = []
        for row in table:
            perm = [0] * I.order
            for y, image in enumerate(row):
                if not 0 <= image < I.order:
                    raise ParseError(f"{label} sends {y} outside the module", (y, image))
                perm[relabel[y]] = relabel[image]
            perms.append(tuple(perm))
        return tuple(perms)

    return ActionPair(H, I, translate(doc.nu, "nu"), translate(doc.sigma, "sigma"), name=doc.name)


def cocycle_from_file(doc: CocycleFile, A: ActionPair) -> Cocycle2:
    def values(entries: List[CochainEntry]) -> Dict[Tuple[int, ...], List[int]]:
        table: Dict[Tuple[int, ...], List[int]] = {}
        for entry in entries:
            args = tuple(entry.args)
            if args in table:
                raise ParseError("duplicate cochain entry", args)
            table[args] = entry.value
        return table

    return Cocycle2.from_values(A, values(doc.beta), values(doc.tau))


def extension_from_file(doc: ExtensionFile) -> Extension:
    E = brace_from_file(doc.brace)
    H = brace_from_file(doc.base) if doc.base is not None else None
    return extension_from_parts(
        E,
        doc.ideal,
        doc.proj,
        section=doc.section,
        H=H,
        invariant_factors=doc.module,
        name=doc.name,
    )


# -----------------------------------------------------------------------------
# Gateway
# -----------------------------------------------------------------------------
class FileGateway:
    """
    Reads and writes JSON documents. Output is indented with a trailing
    newline so repeated runs are byte-identical.
    """

    def read(self, path: Path, model: Type[Model]) -> Model:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
        try:
            return model.model_validate(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON at line {exc.lineno}") from exc
        except ValidationError as exc:
            first = exc.errors()[0]
            location = ".".join(str(part) for part in first["loc"])
            raise ParseError(f"{path}: {location}: {first['msg']}") from exc

    def write(self, path: Path, document: BaseModel) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.debug("wrote %s", path)
        return path

    def read_brace(self, path: Path) -> BraceFile:
        return self.read(path, BraceFile)

    def read_module(self, path: Path) -> ModuleFile:
        return self.read(path, ModuleFile)

    def read_actions(self, path: Path) -> ActionFile:
        return self.read(path, ActionFile)

    def read_cocycle(self, path: Path) -> CocycleFile:
        return self.read(path, CocycleFile)

    def read_extension(self, path: Path) -> ExtensionFile:
        return self.read(path, ExtensionFile)
