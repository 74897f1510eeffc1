"""
Frequency-domain CNN verification kit - command-line entry point
"""
import argparse
import logging
import sys

from config import BENCH_SETTINGS, DEFAULT_FORMAT, DEFAULT_OUTPUT, DEFAULT_SEED, LOG_LEVEL, REPORT_FORMATS, SUITES, WORKERS
from reports.report_store import bench_path, emit_report
from spectral.errors import CorrectnessError, ReportIOError, SpectralError, UsageError
from suites.registry import SuiteConfig, list_checks, run_suites

logger = logging.getLogger('verify')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _csv_list(text):
    return [item.strip() for item in text.split(',') if item.strip()]


def parse_sizes(text):
    try:
        return [int(item) for item in _csv_list(text)]
    except ValueError:
        raise UsageError(f"--sizes expects comma-separated integers, got {text!r}")


def parse_tolerances(pairs):
    """['name=value', ...] -> {name: float}"""
    overrides = {}
    for pair in pairs or []:
        name, sep, value = pair.partition('=')
        if not sep or not name:
            raise UsageError(f"--tolerance expects <check>=<real>, got {pair!r}")
        try:
            overrides[name.strip()] = float(value)
        except ValueError:
            raise UsageError(f"tolerance for {name} is not a number: {value!r}")
    return overrides


def build_parser():
    parser = argparse.ArgumentParser(
        prog='verify',
        description='Verify frequency-domain CNN closed forms against numerical oracles')
    parser.add_argument('--suite', default=','.join(SUITES),
                        help=f"comma-separated suites from {', '.join(SUITES)} (default: all)")
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED, help='seed for random instances')
    parser.add_argument('--sizes', default=','.join(str(n) for n in BENCH_SETTINGS['sizes']),
                        help='comma-separated bench sizes, increasing powers of two')
    parser.add_argument('--out', default=DEFAULT_OUTPUT, help='report path')
    parser.add_argument('--format', choices=REPORT_FORMATS, default=DEFAULT_FORMAT)
    parser.add_argument('--tolerance', action='append', metavar='CHECK=REAL',
                        help='override one check tolerance (repeatable)')
    parser.add_argument('--workers', type=int, default=WORKERS, help='checks run concurrently')
    parser.add_argument('--log-level', default=LOG_LEVEL, type=str.upper,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    parser.add_argument('--list', action='store_true', help='print registered checks and exit')
    return parser


def build_config(args):
    return SuiteConfig(
        suites=_csv_list(args.suite),
        seed=args.seed,
        tolerance_overrides=parse_tolerances(args.tolerance),
        sizes=parse_sizes(args.sizes),
        output_path=args.out,
        format=args.format,
        workers=args.workers,
    )


def print_checks(rows):
    for suite, name, anchor, tolerance in rows:
        print(f"{suite:<12} {name:<40} {tolerance:<10g} {anchor}")


def print_results(report):
    """Per-check status lines and the summary"""
    for record in report.records:
        if record.informational:
            status = 'ℹ️ '
        else:
            status = '✅' if record.passed else '❌'
        line = f"{status} {record.name}: error {record.error:.3e} (tolerance {record.tolerance:g})"
        if record.note:
            line += f" - {record.note}"
        print(line)

    for row in report.bench:
        print(f"⏱️  n={row.n}: direct {row.direct_ns} ns, spectral {row.spectral_ns} ns, ratio {row.ratio:.3f}")

    summary = report.summary
    print(f"\n📊 {summary['passed']}/{summary['total']} checks passed, {summary['failed']} failed")
    if report.all_passed:
        print('✅ All checks passed')
    else:
        print('❌ Failed: ' + ', '.join(record.name for record in report.failures()))


def handle_error(error):
    """Exit code for an error that escaped the run"""
    if isinstance(error, UsageError):
        print(f"❌ Usage error: {error}", file=sys.stderr)
        return EXIT_USAGE
    elif isinstance(error, ReportIOError):
        print(f"❌ Report error: {error}", file=sys.stderr)
        return EXIT_FAILED
    elif isinstance(error, CorrectnessError):
        print(f"❌ Correctness gate failed (max error {error.max_error:.3e}): {error}", file=sys.stderr)
        return EXIT_FAILED
    elif isinstance(error, SpectralError):
        print(f"❌ {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_FAILED
    raise error


def main(argv=None):
    """Run the selected suites; returns the process exit code"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format='%(levelname)s %(name)s: %(message)s')
    try:
        config = build_config(args)
        if args.list:
            print_checks(list_checks(config))
            return EXIT_OK
        report = run_suites(config)
        emit_report(report, config.output_path, config.format)
        print_results(report)
        print(f"📝 Report written to {config.output_path}")
        if report.bench and config.format == 'csv':
            print(f"📝 Bench table written to {bench_path(config.output_path)}")
        return EXIT_OK if report.all_passed else EXIT_FAILED
    except SpectralError as e:
        return handle_error(e)


if __name__ == '__main__':
    sys.exit(main())
