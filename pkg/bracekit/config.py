# bracekit/config.py
"""
Environment-based settings for bracekit.

Responsibilities:
- Load a local .env file (if present) via python-dotenv.
- Expose a validated `settings` object with the default search bounds used by
  the exhaustive searches (automorphisms, enumeration, brute-force oracles).

Every bound can be overridden per job from the command line.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from typing import Any, Iterator

from dotenv import load_dotenv
from pydantic import BaseModel, Field, PositiveInt

load_dotenv()


class Settings(BaseModel):
    """
    Default bounds and switches. Values must be positive.
    """
    MAX_AUTOMORPHISM_ORDER: PositiveInt = Field(
        16, description="Largest brace order for exhaustive automorphism search"
    )
    MAX_ENUMERATION_ORDER: PositiveInt = Field(
        6, description="Largest order accepted by enumerate_braces"
    )
    MAX_LISTED_CLASSES: PositiveInt = Field(
        256, description="Largest group whose classes are listed one by one"
    )
    MAX_BRUTE_FORCE: PositiveInt = Field(
        200_000, description="Largest search space an oracle may enumerate"
    )
    ORACLE: bool = Field(False, description="Cross-check linear algebra by enumeration")
    LOG_LEVEL: str = Field("WARNING", description="Root logging level for the CLI")

    @classmethod
    def from_env(cls) -> "Settings":
        env = {
            "MAX_AUTOMORPHISM_ORDER": os.getenv("BRACEKIT_MAX_AUTOMORPHISM_ORDER"),
            "MAX_ENUMERATION_ORDER": os.getenv("BRACEKIT_MAX_ENUMERATION_ORDER"),
            "MAX_LISTED_CLASSES": os.getenv("BRACEKIT_MAX_LISTED_CLASSES"),
            "MAX_BRUTE_FORCE": os.getenv("BRACEKIT_MAX_BRUTE_FORCE"),
            "ORACLE": os.getenv("BRACEKIT_ORACLE"),
            "LOG_LEVEL": os.getenv("BRACEKIT_LOG_LEVEL"),
        }
        return cls(**{key: value for key, value in env.items() if value is not None})


settings = Settings.from_env()


@contextmanager
def overridden(**values: Any) -> Iterator[Settings]:
    """Temporarily replace fields of the shared settings; None values are ignored."""
    changes = {key: value for key, value in values.items() if value is not None}
    checked = Settings(**{**settings.model_dump(), **changes})
    saved = {key: getattr(settings, key) for key in changes}
    for key in changes:
        setattr(settings, key, getattr(checked, key))
    try:
        yield settings
    finally:
        for key, value in saved.items():
            setattr(settings, key, value)
