#!/usr/bin/env python3
"""
Kempner function CLI: evaluate f(n), run exact sums, verify asymptotics.
"""
import argparse
import asyncio
import logging
import os
import sys
from contextlib import contextmanager
from math import isqrt
from typing import Iterator, List, Optional, Sequence, TextIO

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from src.arithmetic.kempner import block_kempner, lemma1_fast_path
from src.arithmetic.sieve import factorize_block, sieve_primes
from src.errors import InvariantViolation, PreconditionError, ResourceError
from src.models.config import EngineConfig, SumConfig, VerifyOptions
from src.models.reports import VerificationTable
from src.models.sums import RunReport
from src.service import SummationService
from src.utils.output import (
    CheckpointCsvWriter,
    dump_json,
    format_cell,
    load_report,
    report_document,
    write_table_csv,
)
from src.utils.parser import ValueParser
from src.verifiers.factory import VerifierFactory

WORKERS_ENV = "KEMPNER_WORKERS"
DEFAULT_VERIFY_XMAX = 10 ** 7

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

console = Console(stderr=True)

logging.basicConfig(
    level=logging.INFO,
    format="%(message)s",
    handlers=[RichHandler(console=console, rich_tracebacks=True)]
)
logger = logging.getLogger(__name__)

F_COLUMNS = ["n", "f", "P", "factorization", "fast_path"]


def _integer(text: str) -> int:
    try:
        return ValueParser.parse_integer(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _int_list(text: str) -> List[int]:
    try:
        return ValueParser.parse_int_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _float_list(text: str) -> List[float]:
    try:
        return ValueParser.parse_float_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if not raw:
        return 1
    try:
        return ValueParser.parse_integer(raw)
    except ValueError:
        raise PreconditionError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")


def _add_run_arguments(parser: argparse.ArgumentParser, xmax_default: Optional[int]) -> None:
    parser.add_argument(
        '--xmax',
        type=_integer,
        required=xmax_default is None,
        default=xmax_default,
        help='Upper end of the summation range, e.g. 10^7'
             + (f' (default: {xmax_default})' if xmax_default else '')
    )

    grid = parser.add_mutually_exclusive_group()
    grid.add_argument(
        '--grid',
        type=_int_list,
        help='Comma-separated checkpoints; x_max is appended when missing'
    )
    grid.add_argument(
        '--grid-ratio',
        type=float,
        help='Geometric checkpoint ratio starting at 1000'
    )
    grid.add_argument(
        '--grid-file',
        help='File with one checkpoint per line (# comments allowed)'
    )

    parser.add_argument(
        '--k',
        type=_int_list,
        help='k-free variants, e.g. 2,3'
    )

    parser.add_argument(
        '--moments',
        type=_int_list,
        help='Moment orders r in [2, 4] (default: 2)'
    )

    parser.add_argument(
        '--workers',
        type=_integer,
        help=f'Worker processes (default: ${WORKERS_ENV} or 1)'
    )

    parser.add_argument(
        '--block-size',
        type=_integer,
        default=2 ** 20,
        help='Integers per sieve block (default: 2^20)'
    )

    parser.add_argument(
        '--cross-check',
        action='store_true',
        help='Compare k-free sieve flags with factor exponents in every block'
    )


def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--format',
        choices=['csv', 'json'],
        default='csv',
        help='Output format (default: csv)'
    )

    parser.add_argument(
        '-o', '--output',
        help='Output file (default: standard output)'
    )

    parser.add_argument(
        '--debug',
        action='store_true',
        help='Enable debug logging'
    )


def build_parser() -> argparse.ArgumentParser:
    """Command line parser with the f, sum and verify subcommands."""
    parser = argparse.ArgumentParser(
        description="Evaluate and sum the Kempner function f(n)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s f 10 1024
  %(prog)s sum --xmax 10^6 --grid 10,100,1000 --k 2,3
  %(prog)s verify theorem3 --xmax 10^7 --workers 4
  %(prog)s verify eq12 --k 2,3,4 --n 10^6
        """
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    f_parser = subparsers.add_parser('f', help='Evaluate f(n) for one or more n')
    f_parser.add_argument('n', nargs='+', type=_integer, help='Integers n >= 1')
    _add_output_arguments(f_parser)

    sum_parser = subparsers.add_parser('sum', help='Exact sums up to x_max at checkpoints')
    _add_run_arguments(sum_parser, None)
    _add_output_arguments(sum_parser)

    verify_parser = subparsers.add_parser('verify', help='Compare exact sums with asymptotics')
    verify_parser.add_argument('target', choices=VerifierFactory.targets(), help='Verify target')
    _add_run_arguments(verify_parser, DEFAULT_VERIFY_XMAX)
    verify_parser.add_argument(
        '--n',
        type=_integer,
        default=10 ** 6,
        help='Partial-sum length for eq12 (default: 10^6)'
    )
    verify_parser.add_argument(
        '--x',
        type=_float_list,
        help='x values for lemma2 (default: 1e4,1e6,1e8)'
    )
    verify_parser.add_argument(
        '--report',
        help='Reuse the run stored in a JSON file written by "sum --format json"'
    )
    _add_output_arguments(verify_parser)

    return parser


def build_sum_config(args: argparse.Namespace) -> SumConfig:
    grid: Optional[List[int]] = None
    if args.grid:
        grid = sorted(set(args.grid))
    elif args.grid_ratio:
        grid = ValueParser.ratio_grid(args.xmax, args.grid_ratio)
    elif args.grid_file:
        grid = sorted(set(ValueParser.load_grid_file(args.grid_file)))
    if grid and grid[-1] < args.xmax:
        grid.append(args.xmax)

    fields = {
        "x_max": args.xmax,
        "grid": grid,
        "block_size": args.block_size,
        "workers": args.workers if args.workers is not None else _default_workers(),
        "cross_check": args.cross_check,
    }
    if args.k:
        fields["ks"] = args.k
    if args.moments:
        fields["moment_orders"] = args.moments
    return SumConfig(**fields)


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, 'w', newline='') as f:
        yield f


def evaluate_f(n: int, engine: EngineConfig) -> dict:
    """One printed record of the f subcommand, computed on the sieve path."""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if n >= 2 ** 63 - 1:
        raise PreconditionError(f"n={n} is outside the 64-bit range")
    base = sieve_primes(isqrt(n), engine)
    block = factorize_block(n, n + 1, base, block_size=1)
    factorization = block.entry(0)
    largest = int(block.largest[0])
    fast = lemma1_fast_path(n, largest) is not None
    value = largest if fast else int(block_kempner(block)[0])
    return {
        "n": n,
        "f": value,
        "P": largest,
        "factorization": str(factorization),
        "fast_path": fast,
    }


def cmd_f(args: argparse.Namespace, engine: EngineConfig) -> int:
    records = [evaluate_f(n, engine) for n in args.n]
    with open_output(args.output) as out:
        if args.format == 'json':
            dump_json({"records": records}, out)
        else:
            out.write(",".join(F_COLUMNS) + "\n")
            for record in records:
                out.write(",".join(format_cell(record[c]) for c in F_COLUMNS) + "\n")
            out.flush()
    return EXIT_OK


def run_with_progress(config: SumConfig, engine: EngineConfig,
                      writer: Optional[CheckpointCsvWriter] = None) -> RunReport:
    service = SummationService(config, engine)

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("{task.completed}/{task.total} blocks"),
        TimeElapsedColumn(),
        console=console,
        transient=True,
    ) as progress:
        task = progress.add_task(f"Summing to {config.x_max}...", total=None)

        def on_segment(done: int, total: int) -> None:
            progress.update(task, completed=done, total=total)

        return asyncio.run(service.run(
            on_checkpoint=writer.write if writer else None,
            on_segment=on_segment,
        ))


def print_run_summary(report: RunReport) -> None:
    """Print a summary table of the run to stderr."""
    table = Table(title="Summation Summary")
    table.add_column("x", justify="right", style="cyan")
    table.add_column("sum_f", justify="right", style="green")
    table.add_column("sum_P", justify="right", style="green")
    table.add_column("sum_f / sum_P", justify="right")
    table.add_column("sum_f_hard", justify="right", style="yellow")

    for cp in report.checkpoints:
        table.add_row(
            str(cp.x),
            str(cp.sum_f),
            str(cp.sum_P),
            f"{cp.sum_f / cp.sum_P:.6f}" if cp.sum_P else "-",
            str(cp.sum_f_hard),
        )

    console.print(table)
    if report.elapsed_seconds is not None:
        console.print(f"[green]✓ {len(report.checkpoints)} checkpoints in "
                      f"{report.elapsed_seconds:.2f}s[/green]")


def print_verdicts(table: VerificationTable) -> None:
    if not table.discriminations:
        return
    summary = Table(title=f"{table.target}: constant discrimination")
    summary.add_column("Sum", style="cyan")
    summary.add_column("Candidate")
    summary.add_column("Deviation at largest x", justify="right")
    summary.add_column("Trend", justify="right")
    for report in table.discriminations:
        for trace in report.candidates:
            marker = "[bold green]" if trace.label == report.verdict else ""
            summary.add_row(
                report.target,
                f"{marker}{trace.label}",
                format_cell(trace.deviations[-1]),
                format_cell(trace.trend),
            )
    console.print(summary)


def cmd_sum(args: argparse.Namespace, engine: EngineConfig) -> int:
    config = build_sum_config(args)
    console.print(f"[cyan]Summing f(n) for n <= {config.x_max} "
                  f"({len(config.checkpoints)} checkpoints, {config.workers} workers)...[/cyan]")

    with open_output(args.output) as out:
        if args.format == 'json':
            report = run_with_progress(config, engine)
            dump_json(report_document(report), out)
        else:
            writer = CheckpointCsvWriter(out, config.ks, config.moment_orders)
            writer.write_header()
            report = run_with_progress(config, engine, writer)

    print_run_summary(report)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, engine: EngineConfig) -> int:
    config = build_sum_config(args)
    options = VerifyOptions(
        target=args.target,
        ks=args.k or [],
        n=args.n,
        grid=config.checkpoints,
        **({"lemma_xs": args.x} if args.x else {}),
    )
    verifier = VerifierFactory.create_verifier(options, engine)

    report: Optional[RunReport] = None
    if args.report:
        with open(args.report) as f:
            report, _ = load_report(f.read())
        logger.info(f"Loaded {len(report.checkpoints) if report else 0} checkpoints "
                    f"from {args.report}")
    elif verifier.needs_report:
        report = run_with_progress(verifier.sum_config(config), engine)

    table = verifier.verify(report)

    with open_output(args.output) as out:
        if args.format == 'json':
            dump_json(report_document(report, [table]), out)
        else:
            write_table_csv(out, table)

    print_verdicts(table)
    return EXIT_OK


COMMANDS = {
    'f': cmd_f,
    'sum': cmd_sum,
    'verify': cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)

    engine = EngineConfig()
    try:
        return COMMANDS[args.command](args, engine)
    except KeyboardInterrupt:
        console.print("\n[yellow]Cancelled by user[/yellow]")
        return EXIT_FAILURE
    except ResourceError as e:
        console.print(f"[red]Refused: {e}[/red]")
        return EXIT_CAPACITY
    except (PreconditionError, ValidationError) as e:
        console.print(f"[red]Invalid input: {e}[/red]")
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        console.print(f"[red]Error: {e}[/red]")
        return EXIT_USAGE
    except InvariantViolation as e:
        console.print(f"[red]Invariant violated, results discarded: {e}[/red]")
        if args.debug:
            console.print_exception()
        return EXIT_FAILURE
    except Exception as e:
        console.print(f"[red]Unexpected error: {e}[/red]")
        console.print_exception()
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
