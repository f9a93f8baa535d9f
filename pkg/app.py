"""Command-line interface for the barycentric transformation toolkit.

Reports go to stdout and are byte-identical across runs; log messages go to
stderr. Exit status is 0 on success, 1 on an input error and 2 on a resource
or store error.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Callable, NoReturn, Optional, Sequence

from dotenv import load_dotenv

load_dotenv()

from config import (  # noqa: E402
    CENSUS_WORKERS,
    DEFAULT_BUDGET,
    DEFAULT_ENUMERATION_BOX,
    DEFAULT_ENUMERATION_MAX_VERTICES,
    DEFAULT_MAX_HULL_VERTICES,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_RESOURCE_ERROR,
    LOG_LEVEL,
    STORE_PATH_ENV,
    FailureReason,
    InputFormat,
    OutputFormat,
)
from errors import BarycentricError, ParseError, StoreError  # noqa: E402
from analysis.fano import FanoPolytope, b_transform, formal_orbit, validate_fano  # noqa: E402
from analysis.families import fano, named_fixture  # noqa: E402
from classification.engine import Unresolved, classify, exact_period, orbit_classes  # noqa: E402
from data.enumerator import enumerate_fano_polygons  # noqa: E402
from data.formats import parse, serialize  # noqa: E402
from graph import run_census  # noqa: E402
from reports.figures import write_trajectory_svg  # noqa: E402
from reports.render import (  # noqa: E402
    render_analysis,
    render_census,
    render_classification,
    render_orbit,
    render_transform,
)

logger = logging.getLogger(__name__)


class CliParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the input-error status."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def configure_logging(level: str = LOG_LEVEL) -> None:
    logging.basicConfig(
        level=level.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def read_input(source: str) -> str:
    """File contents, stdin for ``-``, or ``source`` itself as literal text."""
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return source


def load_polytope(args: argparse.Namespace) -> tuple[str, FanoPolytope]:
    """The single polytope named by ``--fixture`` or given as input.

    Raises:
        ParseError: If the input holds no polytope.
        GeometryError: If it is not Fano.
        KeyError: If the fixture name matches nothing.
    """
    if args.fixture:
        return args.fixture, named_fixture(args.fixture)
    if not args.polytope:
        raise ParseError("no polytope given (pass vertices, a file or --fixture)")
    records = parse(read_input(args.polytope), InputFormat(args.input_format), args.transpose)
    if not records:
        raise ParseError("input contains no polytope")
    if len(records) > 1:
        logger.warning(f"Input holds {len(records)} polytopes; using the first")
    return records[0].id, fano(records[0].vertices)


def cmd_analyze(args: argparse.Namespace) -> int:
    name, P = load_polytope(args)
    sys.stdout.write(render_analysis(name, P))
    return EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    _, P = load_polytope(args)
    if args.formal:
        sys.stdout.write(render_transform(formal_orbit(P, args.steps)))
        return EXIT_OK

    iterates = [P.polytope]
    failure: Optional[str] = None
    current = P
    for _ in range(args.steps):
        image = b_transform(current)
        iterates.append(image)
        result = validate_fano(image.vertices)
        if isinstance(result, FailureReason):
            failure = f"not Fano: {result.value}"
            break
        current = result
    sys.stdout.write(render_transform(iterates, failure))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    name, P = load_polytope(args)
    verdict, trajectory = classify(P, args.budget, args.max_hull_vertices)
    sys.stdout.write(render_classification(name, verdict, trajectory, exact_period(P, args.budget)))
    if isinstance(verdict, Unresolved) and verdict.resource_abort:
        return EXIT_RESOURCE_ERROR
    return EXIT_OK


def cmd_orbit(args: argparse.Namespace) -> int:
    name, P = load_polytope(args)
    sys.stdout.write(render_orbit(name, orbit_classes(P, args.budget, args.include_start)))
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    input_text = read_input(args.input) if args.input else None
    result = run_census(
        input_text=input_text,
        input_format=InputFormat(args.input_format),
        transpose=args.transpose,
        enumerate_box=args.enumerate_box,
        max_vertices=args.max_vertices,
        index_filter=args.index,
        budget=args.budget,
        max_hull_vertices=args.max_hull_vertices,
        dedup=not args.no_dedup,
        smooth_only=args.smooth_only,
        workers=args.workers,
        store_path=args.store or os.getenv(STORE_PATH_ENV) or None,
    )
    if result.get("error"):
        print(f"Error: {result['error']}", file=sys.stderr)
        return result.get("exit_status") or EXIT_INPUT_ERROR
    report = result["report"]
    sys.stdout.write(render_census(report, OutputFormat(args.format), result.get("reused", 0)))
    aborted = [r.id for r in report.results if r.verdict.resource_abort]
    if aborted:
        logger.warning(f"Hull-size ceiling reached for {len(aborted)} polytopes: {', '.join(aborted)}")
        return EXIT_RESOURCE_ERROR
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    records = enumerate_fano_polygons(args.box, args.max_vertices, args.index)
    sys.stdout.write(serialize(records, InputFormat(args.output_format)))
    return EXIT_OK


def cmd_svg(args: argparse.Namespace) -> int:
    _, P = load_polytope(args)
    verdict, trajectory = classify(P, args.budget, args.max_hull_vertices, with_flags=False)
    path = write_trajectory_svg(args.output, trajectory, verdict)
    logger.info(f"Wrote {path}")
    return EXIT_OK


def _add_polytope_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("polytope", nargs="?", help="vertices '(x,y);(x,y);...', a file, or - for stdin")
    parser.add_argument("--fixture", help="named worked example (fuzzy matched)")
    _add_input_format(parser)


def _add_input_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--input-format",
        choices=[f.value for f in InputFormat],
        default=InputFormat.PLAIN.value,
    )
    parser.add_argument("--transpose", action="store_true", help="grdb-matrix rows are vertices")


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--max-hull-vertices", type=int, default=DEFAULT_MAX_HULL_VERTICES)


def build_parser() -> CliParser:
    parser = CliParser(prog="barycentric", description="Iterated barycentric transformation of Fano polytopes")
    parser.add_argument("--log-level", default=LOG_LEVEL)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    p = sub.add_parser("analyze", help="predicates and invariants of one polytope")
    _add_polytope_input(p)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("transform", help="emit B(P) or B^n(P)")
    _add_polytope_input(p)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--formal", action="store_true", help="continue past a failure with the polygon formula")
    p.set_defaults(handler=cmd_transform)

    p = sub.add_parser("classify", help="type verdict and trajectory")
    _add_polytope_input(p)
    _add_budget(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("orbit", help="equivalence classes along the trajectory")
    _add_polytope_input(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--include-start", action="store_true")
    p.set_defaults(handler=cmd_orbit)

    p = sub.add_parser("census", help="grouped verdict counts over many polytopes")
    p.add_argument("input", nargs="?", help="polytope file or - for stdin; omitted runs the enumerator")
    _add_input_format(p)
    _add_budget(p)
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    p.add_argument("--smooth-only", action="store_true")
    p.add_argument("--index", type=int, help="keep only this Gorenstein index")
    p.add_argument("--enumerate-box", type=int, default=DEFAULT_ENUMERATION_BOX)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_ENUMERATION_MAX_VERTICES)
    p.add_argument("--workers", type=int, default=CENSUS_WORKERS)
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--store", help=f"results store path (default: ${STORE_PATH_ENV})")
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("enumerate", help="Fano polygons with vertices in a box")
    p.add_argument("--box", type=int, default=DEFAULT_ENUMERATION_BOX)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_ENUMERATION_MAX_VERTICES)
    p.add_argument("--index", type=int)
    p.add_argument(
        "--output-format",
        choices=[f.value for f in InputFormat],
        default=InputFormat.PLAIN.value,
    )
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("svg", help="draw a planar trajectory strip")
    _add_polytope_input(p)
    _add_budget(p)
    p.add_argument("-o", "--output", required=True, help="SVG file to write")
    p.set_defaults(handler=cmd_svg)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv`` and run one subcommand.

    Returns:
        The process exit status.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.log_level)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except StoreError as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_RESOURCE_ERROR
    except (BarycentricError, KeyError, ValueError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
