# bracekit/cross_reference.py
"""
Cross Reference

Checks that the names a document refers to (the brace and module of an
action file, the actions of a cocycle file, catalog lookups) match the
documents they are combined with.

- Exact match first.
- Near misses ("worked_amend" vs "worked_amended") are reported as
  suggestions in the CrossReferenceError message, never silently accepted.
"""

from __future__ import annotations

import difflib
from typing import Iterable, Optional

from .errors import CrossReferenceError
from .models import ActionFile, CocycleFile


class CrossReferenceChecker:
    def __init__(self, fuzzy_threshold: float = 0.7) -> None:
        self.fuzzy_threshold = fuzzy_threshold

    def suggest(self, name: str, known: Iterable[str]) -> Optional[str]:
        """Closest known name above the threshold, compared case-insensitively."""
        best_match = None
        best_ratio = 0.0
        for candidate in known:
            ratio = difflib.SequenceMatcher(None, name.lower(), candidate.lower()).ratio()
            if ratio > best_ratio:
                best_ratio = ratio
                best_match = candidate
        if best_match is not None and best_ratio >= self.fuzzy_threshold:
            return best_match
        return None

    def resolve(self, kind: str, name: str, known: Iterable[str]) -> str:
        known = sorted(known)
        if name in known:
            return name
        hint = self.suggest(name, known)
        message = f"unknown {kind} '{name}'"
        if hint:
            message += f"; did you mean '{hint}'?"
        raise CrossReferenceError(message)

    def expect(self, kind: str, referenced: str, actual: Optional[str]) -> None:
        """A document refers to `referenced`; the file supplied for it is named `actual`."""
        if actual is None or referenced == actual:
            return
        self.resolve(kind, referenced, [actual])

    # -------------------------------------------------------------------------
    # Documents
    # -------------------------------------------------------------------------
    def check_actions(self, doc: ActionFile, brace: Optional[str], module: Optional[str]) -> None:
        self.expect("brace", doc.brace, brace)
        self.expect("module", doc.module, module)

    def check_cocycle(
        self,
        doc: CocycleFile,
        brace: Optional[str],
        module: Optional[str],
        actions: Optional[str],
    ) -> None:
        self.expect("brace", doc.brace, brace)
        self.expect("module", doc.module, module)
        self.expect("actions", doc.actions, actions)

