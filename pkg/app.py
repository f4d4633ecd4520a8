# app.py
"""
Command-line entrypoint for bracekit.

Exposes one subcommand per operation (verify, autb, goodpair, cohomology,
extend, classify, equiv, wells, inducible, enumerate, ybe, export-catalog);
see `python app.py --help`.

Exit codes:
- 0   success
- 1   validation failed (the report says why)
- 2   usage error
- 10+ one code per error class, see bracekit/errors.py
"""

from __future__ import annotations

import logging
import sys
from typing import Optional, Sequence

from bracekit.catalog_store import CatalogStore
from bracekit.command_router import CommandRouter
from bracekit.config import settings
from bracekit.cross_reference import CrossReferenceChecker
from bracekit.errors import BraceKitError
from bracekit.file_gateway import FileGateway
from bracekit.job_core import JobCore

logger = logging.getLogger("bracekit")

# ---------------------------------------------------------------------------
# Dependencies wiring
# ---------------------------------------------------------------------------

checker = CrossReferenceChecker(fuzzy_threshold=0.7)
gateway = FileGateway()
router = CommandRouter()


def _configure_logging(verbosity: int) -> None:
    level = {0: settings.LOG_LEVEL, 1: "INFO"}.get(verbosity, "DEBUG")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = router.route(argv)
    except BraceKitError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return exc.exit_code

    _configure_logging(config.verbosity)
    core = JobCore(store=CatalogStore.builtin(), gateway=gateway, checker=checker)
    try:
        ctx = core.run(config)
    except BraceKitError as exc:
        logger.debug("job failed", exc_info=True)
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code

    sys.stdout.write(ctx.text)
    return ctx.exit_code


if __name__ == "__main__":
    sys.exit(main())
