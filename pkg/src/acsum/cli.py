"""Command-line front end.

Exit codes: 0 the sum admits an almost complex structure, 1 it provably
does not, 2 the engine cannot decide, 3 bad input (expression syntax,
file errors, unresolved names), 4 internal error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .definitions import DefinitionError, load_definitions
from .engine import Environment, UnresolvedManifold, decide
from .expressions import ExpressionError
from .manifolds import DimensionMismatch, MissingCohomology
from .obstruction import ParityError
from .registry import UnknownManifold
from .report import Report, build_report, render_machine, render_text

__all__ = ["main", "run_query"]

_INPUT_ERRORS = (
    ExpressionError,
    DefinitionError,
    UnresolvedManifold,
    UnknownManifold,
    DimensionMismatch,
    MissingCohomology,
    ParityError,
    ValueError,
)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which collides with the
    # UNKNOWN verdict; route usage problems to exit code 3 instead.
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="acsum",
        description=(
            "Decide whether a connected sum of even-dimensional manifolds "
            "admits an almost complex structure, with a machine-checkable "
            "certificate either way."
        ),
        epilog=(
            "Builtin manifolds (parameters are half-dimensions): CP(n), "
            "conj(CP(n)), Sphere(n), SphereProduct(a,b), HP2. Example query: "
            '"3*CP(4) # 2*conj(CP(4))".'
        ),
    )
    parser.add_argument(
        "--query", required=True, help="connected-sum expression to decide"
    )
    parser.add_argument(
        "--manifolds",
        action="append",
        default=[],
        metavar="FILE",
        help="manifold definition file (repeatable)",
    )
    parser.add_argument(
        "--structures",
        action="append",
        default=[],
        metavar="FILE",
        help="structure candidate file (repeatable)",
    )
    parser.add_argument(
        "--modulus-table",
        action="append",
        default=[],
        metavar="FILE",
        help="file with a [moduli] section giving sphere obstruction orders",
    )
    parser.add_argument(
        "--search-bound",
        type=int,
        default=None,
        metavar="N",
        help="maximum structure assignments to examine (default 10^6)",
    )
    parser.add_argument(
        "--allow-external",
        action="store_true",
        help="search registry stubs that rest on outside authority",
    )
    parser.add_argument(
        "--machine",
        action="store_true",
        help="emit a one-line machine-readable JSON record",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    return parser


def run_query(
    query: str,
    *,
    definition_sources: Sequence[tuple[str, str]] = (),
    search_bound: int | None = None,
    include_external: bool = False,
) -> Report:
    """Evaluate a query against the builtins plus the given input texts."""
    defs = load_definitions(definition_sources)
    environment = Environment(defs, include_external=include_external)
    verdict = decide(query, environment=environment, search_bound=search_bound)
    return build_report(query, verdict)


def _read_sources(paths: Sequence[str]) -> list[tuple[str, str]]:
    sources = []
    for path in paths:
        try:
            with open(path, "r", encoding="utf-8", newline=None) as handle:
                sources.append((path, handle.read()))
        except OSError as err:
            raise _UsageError(f"cannot read {path}: {err}") from None
    return sources


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        sources = _read_sources(
            list(args.manifolds) + list(args.structures) + list(args.modulus_table)
        )
    except _UsageError as err:
        print(f"acsum: error: {err}", file=sys.stderr)
        return 3
    try:
        report = run_query(
            args.query,
            definition_sources=sources,
            search_bound=args.search_bound,
            include_external=args.allow_external,
        )
    except _INPUT_ERRORS as err:
        print(f"acsum: error: {err}", file=sys.stderr)
        return 3
    except Exception as err:  # pragma: no cover - defensive
        print(f"acsum: internal error: {err}", file=sys.stderr)
        return 4
    output = render_machine(report) if args.machine else render_text(report)
    sys.stdout.write(output if output.endswith("\n") else output + "\n")
    return report.exit_code
