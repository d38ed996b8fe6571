"""
Command line entry point.

    semica run <spec-file>
    semica example <name>
    semica list-examples

Exit codes report infrastructure status only: 0 when the job ran (whatever
the verdict), 1 on invalid input, 2 when an enumeration exceeded its budget.
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import replace
from pathlib import Path

from semica.cli import (
    JobKind,
    JobSpec,
    ReportFormat,
    emit_report,
    format_spec,
    get_example,
    parse_spec,
    run_job,
)
from semica.datastructure import AnalysisConfig
from semica.errors import (
    BudgetExceededError,
    InsufficientWindowError,
    InvalidInputError,
    NoFolnerSequenceError,
)
from semica.semigroups import NaturalNumbers
from semica.version import __version__

__appname__ = "semica"
__all__ = ["build_parser", "main"]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BUDGET = 2


def _print(*args):
    print(f"[{__appname__}]", *args, file=sys.stderr)


def _index_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if m is None or not 1 <= int(m.group(1)) <= int(m.group(2)):
        raise argparse.ArgumentTypeError(f"expected n1..n2 with 1 <= n1 <= n2, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=__appname__,
        description="Cellular automata over semigroups: Garden-of-Eden and erasable-pair certificates",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, help="Max assignments enumerated per window")
    common.add_argument(
        "--format",
        choices=[str(f) for f in ReportFormat],
        default=str(ReportFormat.HUMAN),
        help="Report format",
    )
    common.add_argument(
        "--windows", type=_index_range, help="Window sequence indices n1..n2 (replaces the schedule)"
    )
    common.add_argument("--background", type=int, help="Background symbol for erasable pairs")
    common.add_argument("--workers", type=int, default=1, help="Enumeration threads")
    common.add_argument("--output", type=Path, help="Write the report here instead of stdout")
    common.add_argument(
        "--dump-spec", action="store_true", help="Print the job as spec text instead of running it"
    )

    verbs = parser.add_subparsers(dest="verb", required=True)
    run = verbs.add_parser("run", parents=[common], help="Run a job from a spec file")
    run.add_argument("spec_file", type=Path)
    example = verbs.add_parser("example", parents=[common], help="Run a built-in job")
    example.add_argument("name")
    verbs.add_parser("list-examples", parents=[common], help="List the built-in jobs")
    return parser


def _load(args: argparse.Namespace) -> JobSpec:
    match args.verb:
        case "run":
            return parse_spec(args.spec_file.read_text(), base_dir=args.spec_file.parent)
        case "example":
            return get_example(args.name)
        case "list-examples":
            return JobSpec(semigroup=NaturalNumbers(), kind=JobKind.EXAMPLES, name="catalog")
        case _:
            raise ValueError(f"Unknown verb: {args.verb}")


def _apply_flags(spec: JobSpec, args: argparse.Namespace) -> JobSpec:
    if args.budget is not None:
        spec = replace(spec, budget=args.budget)
    if args.background is not None:
        if spec.q is not None and not 0 <= args.background < spec.q:
            raise InvalidInputError(f"background {args.background} outside alphabet", field="background")
        spec = replace(spec, background=args.background)
    if args.windows is not None:
        spec = replace(spec, index_range=args.windows, windows=())
    return spec


def _run(args: argparse.Namespace) -> tuple[str, JobSpec]:
    spec = _apply_flags(_load(args), args)
    if args.dump_spec:
        return format_spec(spec), spec
    config = AnalysisConfig(workers=args.workers).validate()
    result = run_job(spec, config)
    return emit_report(result.certificates, args.format, result.results), spec


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, spec = _run(args)
        output = args.output
        if output is None and spec.output and not args.dump_spec:
            output = Path(spec.output)
        if output is not None:
            output.write_text(text)
            _print(f"Report written to {output}")
        else:
            sys.stdout.write(text)
    except BudgetExceededError as e:
        _print(f"Budget exceeded: {e}")
        return EXIT_BUDGET
    except (InvalidInputError, NoFolnerSequenceError, InsufficientWindowError, OSError) as e:
        _print(f"Invalid input: {e}")
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
