"""Command line front end.

Exit status: 0 on success, 1 when a verification finds a mismatch or a window
is rejected, 2 on usage errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, List, Optional

from config.config import OUTPUT_FORMATS, Config
from src.algebra.errors import AffineWeylError
from src.algebra.zperm import format_window, format_window_inline
from src.utils.file_manager import FileManager
from src.workflows import (
    EulerWorkflow,
    OracleWorkflow,
    PermutationWorkflow,
    build_context,
    parse_word,
)
from src.workflows.oracle_workflow import CONTEXTS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def _type_tag(text: str) -> str:
    tag = text.upper()
    if tag not in ("A", "B", "C", "D", "G"):
        raise argparse.ArgumentTypeError(f"unsupported root system type {text!r}")
    return tag


def build_parser(config: Config) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=config.SEED, help="seed for randomized checks")
    common.add_argument("--save", action="store_true", help="also write the output under the generated directory")
    common.add_argument("--progress", action="store_true", default=config.SHOW_PROGRESS, help="show progress bars")
    common.add_argument("--log-level", default=config.LOG_LEVEL, help="logging level (default from AFFINE_LOG_LEVEL)")

    parser = argparse.ArgumentParser(
        prog="affine-orbits",
        description="Exact computations with affine Weyl groups, Kostant's expansion and permutation windows",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    default_format = config.OUTPUT_FORMAT if config.OUTPUT_FORMAT in OUTPUT_FORMATS else "json"

    verify = commands.add_parser("verify-euler", parents=[common], help="compare both sides of Kostant's expansion")
    verify.add_argument("--format", choices=OUTPUT_FORMATS, default=default_format)
    verify.add_argument("type", type=_type_tag)
    verify.add_argument("rank", type=int)
    verify.add_argument("--degree", type=_nonnegative, default=config.DEGREE)

    palc = commands.add_parser("palc", parents=[common], help="list P_alc with signs, dimensions and exponents")
    palc.add_argument("--format", choices=OUTPUT_FORMATS, default=default_format)
    palc.add_argument("type", type=_type_tag)
    palc.add_argument("rank", type=int)
    palc.add_argument("--max-exponent", type=_nonnegative, default=config.MAX_EXPONENT)

    perm = commands.add_parser("perm", parents=[common], help="window of a generator word")
    perm.add_argument("type", type=_type_tag)
    perm.add_argument("n", type=int, help="window size (type A) or rank")
    perm.add_argument("--word", default="", help="comma-separated generator indices, e.g. 0,1,2")
    perm.add_argument("--alt", action="store_true", help="type C with period 2n+2")
    perm.add_argument(
        "--format", choices=("text", "json", "tsv"), default="text",
        help="text: inline window; tsv: serialized form, same as --lines; json: full description",
    )
    perm.add_argument("--lines", action="store_true", help="print the serialized form with a header line")

    check = commands.add_parser("check-perm", parents=[common], help="membership test for a window file")
    check.add_argument("--format", choices=OUTPUT_FORMATS, default=default_format)
    check.add_argument("type", type=_type_tag)
    check.add_argument("n", type=int)
    check.add_argument("window_file", help="window file, or - for standard input")
    check.add_argument("--alt", action="store_true", help="type C with period 2n+2")

    oracle = commands.add_parser("oracle", parents=[common], help="cross-check alcove formulas against BFS")
    oracle.add_argument("--format", choices=OUTPUT_FORMATS, default=default_format)
    oracle.add_argument("type", type=_type_tag)
    oracle.add_argument("rank", type=int)
    oracle.add_argument("--max-len", type=_nonnegative, default=config.MAX_LENGTH)
    oracle.add_argument("--context", choices=CONTEXTS, default="kostant")
    oracle.add_argument("--samples", type=_nonnegative, default=200, help="random words for the parity check")

    return parser


def _emit(payload: Any, text: Optional[str], args, config: Config, prefix: str) -> None:
    """Print JSON or the TSV/text form and optionally save it"""
    if args.format == "json" or text is None:
        output = json.dumps(payload, indent=2)
    else:
        output = text.rstrip("\n")
    print(output)
    if args.save:
        manager = FileManager(config)
        if args.format == "json" or text is None:
            manager.save_report(payload, prefix=prefix)
        else:
            manager.save_table(text, prefix=prefix)


def _kind(args) -> str:
    if getattr(args, "alt", False):
        if args.type != "C":
            raise ValueError("--alt applies to type C only")
        return "C-alt"
    return args.type


def cmd_verify_euler(args, config: Config) -> int:
    report = EulerWorkflow(args.type, args.rank, args.progress).verify(args.degree)
    _emit(report, EulerWorkflow.report_to_tsv(report), args, config, "euler")
    if not report["equal"]:
        mismatch = report["first_mismatch"]
        print(
            f"mismatch at x^{mismatch['degree']}: {mismatch['euler']} vs {mismatch['kostant']}",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_palc(args, config: Config) -> int:
    rows = EulerWorkflow(args.type, args.rank, args.progress).palc_rows(args.max_exponent)
    payload = {"root_system": f"{args.type}{args.rank}", "max_exponent": args.max_exponent, "records": rows}
    _emit(payload, EulerWorkflow.rows_to_tsv(rows), args, config, "palc")
    return EXIT_OK if all(row["checked"] for row in rows) else EXIT_MISMATCH


def cmd_perm(args, config: Config) -> int:
    workflow = PermutationWorkflow(_kind(args), args.n)
    word = parse_word(args.word)
    window = workflow.window_of_word(word)
    if args.format == "json":
        print(json.dumps(workflow.describe(word), indent=2))
    elif args.lines or args.format == "tsv":
        print(format_window(window).rstrip("\n"))
    else:
        print(format_window_inline(window))
    if args.save:
        FileManager(config).save_window(format_window(window), prefix="window")
    return EXIT_OK


def cmd_check_perm(args, config: Config) -> int:
    workflow = PermutationWorkflow(_kind(args), args.n)
    if args.window_file == "-":
        text = sys.stdin.read()
    else:
        with open(args.window_file, encoding="utf-8") as f:
            text = f.read()
    result = workflow.check_text(text)
    tsv = "accepted\treason\tlength\n" + "\t".join([
        "yes" if result["accepted"] else "no",
        result["reason"] or "",
        str(result.get("length", "")),
    ]) + "\n"
    _emit(result, tsv, args, config, "check")
    return EXIT_OK if result["accepted"] else EXIT_MISMATCH


def cmd_oracle(args, config: Config) -> int:
    ctx = build_context(args.type, args.rank, args.context)
    report = OracleWorkflow(ctx, args.progress).run(args.max_len, samples=args.samples, seed=args.seed)
    payload = report.to_dict()
    tsv = "check\tcount\n" + "".join(f"{name}\t{count}\n" for name, count in sorted(report.checks.items()))
    tsv += f"discrepancies\t{len(report.discrepancies)}\n"
    _emit(payload, tsv, args, config, "oracle")
    return EXIT_OK if report.passed else EXIT_MISMATCH


COMMANDS = {
    "verify-euler": cmd_verify_euler,
    "palc": cmd_palc,
    "perm": cmd_perm,
    "check-perm": cmd_check_perm,
    "oracle": cmd_oracle,
}


def configure_logging(level: str) -> None:
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        numeric = logging.WARNING
    logging.basicConfig(level=numeric, format="%(asctime)s %(name)s %(levelname)s %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    config = Config()
    parser = build_parser(config)
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    config.validate()

    try:
        return COMMANDS[args.command](args, config)
    except (AffineWeylError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
