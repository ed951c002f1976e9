# coding=utf-8
"""
knotradar command line

Exit codes: 0 ok, 1 violation, 2 inconsistent verdict, 3 input error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from knotradar import __version__
from knotradar.context import AppContext
from knotradar.core import load_config, parse_tau_assignments
from knotradar.jobs import EXIT_INPUT, JobSpec
from knotradar.utils.errors import KnotRadarError
from knotradar.utils.validators import validate_input_file

logger = logging.getLogger(__name__)

FILE_COMMANDS = {
    "torsion": "knot complement torsion of a presentation (.gp)",
    "hfk11": "knot Floer homology of a (1,1) diagram (.od)",
    "decomp": "enhanced Euler characteristic report (.gre)",
    "detect": "detection verdict from per-coset data (.det) or a diagram (.od)",
    "crosscheck": "compare the diagram Euler characteristic with the Fox calculus torsion (.od)",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotradar",
        description="knotradar - exact torsion, (1,1) knot Floer homology and detection checks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
examples:
  knotradar hfk11 fixtures/trefoil.od
  knotradar decomp fixtures/example14.gre --format kv
  knotradar window --q 5 --chi -2 --n 4
  knotradar batch fixtures/ --jobs 4

file formats are described in docs/FORMATS.md
        """,
    )
    parser.add_argument("--version", action="version", version=f"knotradar {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "kv"], default=None, help="output format (default from config: text)")
    common.add_argument("--cache-dir", default=None, help="result cache directory")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write cached results")
    common.add_argument("--jobs", type=int, default=None, help="worker count for batch runs")
    common.add_argument("--config", default=None, help="configuration file (default: config/config.yaml)")
    common.add_argument("-v", "--verbose", action="store_true", help="log at INFO level")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in FILE_COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file")
        if name == "detect":
            p.add_argument(
                "--no-next-to-top",
                dest="next_to_top",
                action="store_false",
                default=None,
                help="do not rule out higher genus fibred patterns",
            )

    w = sub.add_parser("window", parents=[common], help="grading window constants and identities")
    w.add_argument("--q", type=int, required=True, help="order of the tangle component")
    w.add_argument("--chi", type=int, required=True, help="Euler characteristic of the capped surface S_+")
    w.add_argument("--n", type=int, default=0, help="stabilization count")
    w.add_argument("--tau", action="append", default=None, metavar="J=V", help="correction for surface J (+, - or n), repeatable")

    b = sub.add_parser("batch", parents=[common], help="run every job file in a directory")
    b.add_argument("directory")
    return parser


def _configure_logging(level_name: str, verbose: bool) -> None:
    level = logging.INFO if verbose else getattr(logging, str(level_name).upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s %(message)s", stream=sys.stderr)


def _job(args: argparse.Namespace) -> JobSpec:
    if args.command == "window":
        tau = parse_tau_assignments(args.tau)
        options = {
            "q": args.q,
            "chi": args.chi,
            "n": args.n,
            "tau": tuple(sorted((str(k), v) for k, v in tau.items())),
        }
        return JobSpec.create("window", [], options)
    validate_input_file(args.file, args.command)
    options = {}
    if args.command == "detect" and args.next_to_top is not None:
        options["next_to_top"] = args.next_to_top
    return JobSpec.create(args.command, [args.file], options)


def _main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
    except (FileNotFoundError, KnotRadarError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    _configure_logging(config["APP"]["LOG_LEVEL"], args.verbose)

    try:
        ctx = AppContext(
            config,
            cache_dir=args.cache_dir,
            cache_enabled=False if args.no_cache else None,
            jobs=args.jobs,
            output_format=args.format,
        )
        if args.command == "batch":
            summary = ctx.batch(args.directory)
            sys.stdout.write(ctx.render_summary(summary))
            return summary.exit_code
        record = ctx.run(_job(args))
    except KnotRadarError as e:
        print(f"error: {e.message}", file=sys.stderr)
        if e.suggestion:
            print(f"hint: {e.suggestion}", file=sys.stderr)
        return EXIT_INPUT

    sys.stdout.write(ctx.render(record))
    return record.status


def main() -> None:
    raise SystemExit(_main())


if __name__ == "__main__":
    main()
