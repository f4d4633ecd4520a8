# bracekit/catalog_store.py
"""
CatalogStore

An in-memory store of catalog documents keyed by (kind, name), where kind
is one of "brace", "module", "actions", "cocycle" or "counterexample".

The built-in entries come from bracekit.catalog; a catalog/ directory of
JSON files (as written by export-catalog) can be layered on top.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Type

from pydantic import BaseModel

from . import catalog
from .cross_reference import CrossReferenceChecker
from .file_gateway import (
    FileGateway,
    actions_to_file,
    brace_to_file,
    cocycle_to_file,
    module_to_file,
)
from .models import ActionFile, BraceFile, CocycleFile, ModuleFile

logger = logging.getLogger(__name__)

KINDS: Dict[str, Type[BaseModel]] = {
    "brace": BraceFile,
    "module": ModuleFile,
    "actions": ActionFile,
    "cocycle": CocycleFile,
    "counterexample": BraceFile,
}


def _module_name(moduli: Tuple[int, ...]) -> str:
    return next(name for name, factors in catalog.MODULES.items() if factors == moduli)


class CatalogStore:
    """
    Dictionary-based document store. Not persistent: export() writes it out.
    """

    def __init__(self, checker: Optional[CrossReferenceChecker] = None) -> None:
        self._store: Dict[Tuple[str, str], BaseModel] = {}
        self.checker = checker or CrossReferenceChecker()

    def _key(self, kind: str, name: str) -> Tuple[str, str]:
        if kind not in KINDS:
            raise ValueError(f"unknown catalog kind {kind}")
        return (kind, name)

    # -------------------------------------------------------------------------
    # Factory
    # -------------------------------------------------------------------------
    @classmethod
    def builtin(cls) -> "CatalogStore":
        store = cls()
        for name, E in catalog.trivial_braces().items():
            store.save("brace", name, brace_to_file(E, name))
        for name, factors in catalog.MODULES.items():
            store.save("module", name, module_to_file(catalog.module(name), name))
        for name, A in catalog.action_pairs().items():
            note = catalog.AMENDED_NOTE if name == "worked_amended" else None
            store.save("actions", name, actions_to_file(A, A.H.name, _module_name(A.I.moduli), note))
        for name, (A, c) in catalog.worked_cocycles().items():
            store.save("cocycle", name, cocycle_to_file(c, A.H.name, _module_name(A.I.moduli), A.name, name))
        add, circ = catalog.relabelled_z4_tables()
        store.save(
            "counterexample",
            "z4_relabelled",
            BraceFile(name="z4_relabelled", order=4, add=[list(r) for r in add], circ=[list(r) for r in circ]),
        )
        return store

    # -------------------------------------------------------------------------
    # Access
    # -------------------------------------------------------------------------
    def load(self, kind: str, name: str) -> Optional[BaseModel]:
        return self._store.get(self._key(kind, name))

    def get(self, kind: str, name: str) -> BaseModel:
        """Like load, but a missing entry raises CrossReferenceError with a suggestion."""
        document = self.load(kind, name)
        if document is None:
            self.checker.resolve(kind, name, self.names(kind))
        return document

    def save(self, kind: str, name: str, document: BaseModel) -> None:
        self._store[self._key(kind, name)] = document

    def names(self, kind: str) -> List[str]:
        return sorted(name for k, name in self._store if k == kind)

    # -------------------------------------------------------------------------
    # Files
    # -------------------------------------------------------------------------
    def export(self, directory: Path, gateway: FileGateway) -> List[Path]:
        written = []
        for (kind, name), document in sorted(self._store.items()):
            written.append(gateway.write(Path(directory) / kind / f"{name}.json", document))
        logger.info("exported %d catalog documents to %s", len(written), directory)
        return written

    def load_dir(self, directory: Path, gateway: FileGateway) -> int:
        count = 0
        for kind, model in KINDS.items():
            for path in sorted((Path(directory) / kind).glob("*.json")):
                self.save(kind, path.stem, gateway.read(path, model))
                count += 1
        return count
