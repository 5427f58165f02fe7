import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from cayley.automorphisms import brute_force_aut, summarize_aut
from cayley.verdict import CayleyAnswer, decide_cayley
from config import Config, setup_logging
from reports.export import ExportFormat, export_graph
from reports.report import build_verification_report, render_report, write_report
from reports.survey import survey
from torus.graph import build_torus, torus_params
from utils.args import parse_range, positive_int
from utils.errors import (
    CapacityError,
    GroupBudgetError,
    ParameterError,
    ReportWriteError,
    SearchBudgetError,
    ShapeError,
    TorusCayleyError,
    VertexRangeError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torus-cayley",
        description="TRC4C8[m,n] nanotori: construction, symmetry checks and Cayley verdicts.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="export the torus graph")
    build.add_argument("--m", type=positive_int, required=True)
    build.add_argument("--n", type=positive_int, required=True)
    build.add_argument(
        "--format", type=ExportFormat, choices=list(ExportFormat), default=ExportFormat.EDGELIST
    )
    build.add_argument("--out", type=Path)

    verify = commands.add_parser("verify", help="verify generators, relations and the Cayley map on [n,n]")
    verify.add_argument("--n", type=positive_int, required=True)
    verify.add_argument("--out", type=Path)

    aut = commands.add_parser("aut", help="brute-force automorphism group summary")
    aut.add_argument("--m", type=positive_int, required=True)
    aut.add_argument("--n", type=positive_int, required=True)
    aut.add_argument("--budget", type=positive_int)

    cayley = commands.add_parser("cayley", help="decide whether the torus is a Cayley graph")
    cayley.add_argument("--m", type=positive_int, required=True)
    cayley.add_argument("--n", type=positive_int, required=True)
    cayley.add_argument("--budget", type=positive_int)

    sweep = commands.add_parser("survey", help="decide a range of (m,n) and write a CSV")
    sweep.add_argument("--m", type=parse_range, required=True, metavar="A..B")
    sweep.add_argument("--n", type=parse_range, required=True, metavar="C..D")
    sweep.add_argument("--out", type=Path, required=True)
    sweep.add_argument("--budget", type=positive_int)

    return parser


def _emit(data: bytes, out: Optional[Path]):
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        out.write_bytes(data)
    except OSError as e:
        raise ReportWriteError(f"Cannot write {out}: {e}") from e
    logger.info(f"Wrote {out}")


def _cmd_build(args, config: Config) -> int:
    graph = build_torus(torus_params(args.m, args.n), config.limits.point_cap)
    _emit(export_graph(graph, args.format), args.out)
    return EXIT_OK


def _cmd_verify(args, config: Config) -> int:
    report = build_verification_report(args.n, config.limits)
    if args.out is None:
        _emit(render_report(report).encode("utf-8"), None)
    else:
        write_report(report, args.out)
        logger.info(f"Report written to {args.out}")
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_aut(args, config: Config) -> int:
    limits = config.limits
    graph = build_torus(torus_params(args.m, args.n), limits.point_cap)
    aut = brute_force_aut(graph, args.budget or limits.node_budget, limits.aut_vertex_cap)
    summary = summarize_aut(aut, args.m, args.n)
    _emit((summary.model_dump_json(indent=2) + "\n").encode("utf-8"), None)
    return EXIT_OK


def _cmd_cayley(args, config: Config) -> int:
    limits = config.limits
    verdict = decide_cayley(
        torus_params(args.m, args.n), args.budget or limits.node_budget, limits
    )
    _emit((verdict.model_dump_json(indent=2) + "\n").encode("utf-8"), None)
    return EXIT_BUDGET if verdict.is_cayley == CayleyAnswer.INCONCLUSIVE else EXIT_OK


def _cmd_survey(args, config: Config) -> int:
    survey(args.m, args.n, args.out, args.budget, config)
    return EXIT_OK


COMMANDS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "aut": _cmd_aut,
    "cayley": _cmd_cayley,
    "survey": _cmd_survey,
}


def run_cli(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse has already printed usage to stderr
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging(logging.DEBUG if args.verbose else logging.WARNING)
    config = Config()

    try:
        return COMMANDS[args.command](args, config)
    except (ParameterError, VertexRangeError, ShapeError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (CapacityError, SearchBudgetError, GroupBudgetError) as e:
        logger.error(str(e))
        return EXIT_BUDGET
    except ReportWriteError as e:
        logger.error(str(e))
        return EXIT_FAILED
    except TorusCayleyError as e:
        logger.exception(f"Verification failed: {e}")
        return EXIT_FAILED


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
