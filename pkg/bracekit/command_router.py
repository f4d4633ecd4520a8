# bracekit/command_router.py
"""
Command Router

Turns argv into a validated JobConfig. This layer only parses; it never
touches files or computes anything, so routing can be tested on its own.
"""

from __future__ import annotations

import argparse
from typing import NoReturn, Optional, Sequence

from pydantic import ValidationError

from .errors import UsageError
from .job_context import JobConfig


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("-o", "--output", help="Structured output file (or directory)")
    parent.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0)
    parent.add_argument("--catalog-dir", help="Directory of catalog JSON files layered over the built-ins")
    parent.add_argument("--max-automorphism-order", type=int)
    parent.add_argument("--max-enumeration-order", type=int)
    parent.add_argument("--max-brute-force", type=int)
    return parent


def _pair_inputs() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--entry", help="Catalog action pair, e.g. worked_amended")
    parent.add_argument("--brace", help="Brace file or catalog name of H")
    parent.add_argument("--module", help="Module file or catalog name of I")
    parent.add_argument("--actions", help="Action file or catalog name")
    return parent


class CommandRouter:
    """
    Builds the argparse tree once; route() may be called repeatedly.
    """

    def __init__(self) -> None:
        self.parser = self._build()

    def _build(self) -> argparse.ArgumentParser:
        common, pair = _common(), _pair_inputs()
        parser = _Parser(prog="bracekit", description="Finite left braces: cohomology, extensions, Wells sequence")
        sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

        for name, text in (
            ("verify", "validate the brace axioms of a table pair"),
            ("autb", "list the brace automorphisms"),
            ("ybe", "derive and check the Yang-Baxter solution"),
        ):
            cmd = sub.add_parser(name, parents=[common], help=text)
            cmd.add_argument("brace")

        sub.add_parser("goodpair", parents=[common, pair], help="test the good-pair condition")

        cmd = sub.add_parser("cohomology", parents=[common, pair], help="Z1/H1, H2 or RH2 of a good pair")
        cmd.add_argument("--degree", type=int, choices=(1, 2), default=2)
        cmd.add_argument("--restricted", action="store_true", help="RH2_N instead of H2_N")
        cmd.add_argument("--trivial-actions", action="store_true")
        cmd.add_argument("--oracle", action="store_true")

        cmd = sub.add_parser("extend", parents=[common, pair], help="build the extension of a cocycle")
        cmd.add_argument("--cocycle", required=True, help="Cocycle file or catalog name")

        cmd = sub.add_parser("classify", parents=[common, pair], help="one extension per H2_N class")
        cmd.add_argument("--trivial-actions", action="store_true")
        cmd.add_argument("--oracle", action="store_true")

        cmd = sub.add_parser("equiv", parents=[common], help="are two extensions equivalent")
        cmd.add_argument("extensions", nargs=2)
        cmd.add_argument("--oracle", action="store_true")

        cmd = sub.add_parser("wells", parents=[common], help="the Wells sequence of an extension")
        cmd.add_argument("extension")

        cmd = sub.add_parser("inducible", parents=[common], help="is a compatible pair inducible")
        cmd.add_argument("extension")
        cmd.add_argument("--pair", type=int, help="Index into the sorted compatible pairs")
        cmd.add_argument("--phi", type=int, nargs="+")
        cmd.add_argument("--theta", type=int, nargs="+")
        cmd.add_argument("--sylow", action="store_true", help="also run the Sylow reduction")

        cmd = sub.add_parser("enumerate", parents=[common], help="all braces of an order")
        cmd.add_argument("order", type=int)

        sub.add_parser("export-catalog", parents=[common], help="write the built-in catalog as JSON")
        return parser

    def route(self, argv: Optional[Sequence[str]] = None) -> JobConfig:
        args = vars(self.parser.parse_args(argv))
        if "extension" in args:
            args["extensions"] = [args.pop("extension")]
        fields: dict = {key: value for key, value in args.items() if value is not None}
        try:
            return JobConfig.model_validate(fields)
        except ValidationError as exc:
            first = exc.errors()[0]
            location = ".".join(str(part) for part in first["loc"])
            raise UsageError(f"{location}: {first['msg']}") from exc

