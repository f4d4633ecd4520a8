# bracekit/job_context.py
"""
JobConfig and JobContext

JobConfig is everything one command-line invocation asks for: the command,
its inputs (file paths or catalog names), the output path and the flags.

JobContext accumulates what the job produces:
- human-readable lines for standard output,
- structured documents to be written behind -o,
- the exit status.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt

Command = Literal[
    "verify",
    "autb",
    "goodpair",
    "cohomology",
    "extend",
    "classify",
    "equiv",
    "wells",
    "inducible",
    "enumerate",
    "ybe",
    "export-catalog",
]


class JobConfig(BaseModel):
    """
    Inputs name a file when the path exists and a catalog entry otherwise.
    """
    model_config = ConfigDict(extra="forbid")

    command: Command
    brace: Optional[str] = None
    module: Optional[str] = None
    actions: Optional[str] = None
    entry: Optional[str] = Field(None, description="Catalog action pair supplying brace, module and actions")
    cocycle: Optional[str] = None
    extensions: List[str] = Field(default_factory=list)
    order: Optional[PositiveInt] = None
    degree: Literal[1, 2] = 2
    restricted: bool = False
    trivial_actions: bool = False
    pair: Optional[int] = Field(None, ge=0, description="Index into the sorted C_(nu,sigma)")
    phi: Optional[List[int]] = None
    theta: Optional[List[int]] = None
    sylow: bool = False
    oracle: bool = False
    output: Optional[Path] = None
    catalog_dir: Optional[Path] = None
    verbosity: int = Field(0, ge=0)
    max_automorphism_order: Optional[PositiveInt] = None
    max_enumeration_order: Optional[PositiveInt] = None
    max_brute_force: Optional[PositiveInt] = None


@dataclass
class JobContext:
    config: JobConfig
    lines: List[str] = field(default_factory=list)
    documents: List[Tuple[Path, BaseModel]] = field(default_factory=list)
    exit_code: int = 0

    def emit(self, text: str = "") -> None:
        self.lines.append(text)

    def attach(self, path: Path, document: BaseModel) -> None:
        """Queue a document for writing after the job succeeds."""
        self.documents.append((Path(path), document))

    def fail(self, code: int = 1) -> None:
        self.exit_code = code

    @property
    def text(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")
