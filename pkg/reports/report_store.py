"""
Report persistence
CSV (check,anchor,error,tolerance,pass,ns) or JSON, UTF-8, newline-terminated
"""
import csv
import json
import logging
import math
from pathlib import Path

from config import REPORT_FORMATS
from spectral.errors import ReportIOError, UsageError

logger = logging.getLogger('report_store')

CHECK_HEADER = ['check', 'anchor', 'error', 'tolerance', 'pass', 'ns']
BENCH_HEADER = ['n', 'direct_ns', 'spectral_ns', 'ratio', 'repetitions']


def _number(value):
    """repr-exact float text; inf and nan spelled out"""
    value = float(value)
    return repr(value) if math.isfinite(value) else str(value)


def _json_number(value):
    value = float(value)
    return value if math.isfinite(value) else str(value)


def bench_path(path):
    """<stem>.bench.csv next to the report"""
    path = Path(path)
    return path.with_name(f"{path.stem}.bench.csv")


class ReportStore:
    def emit_report(self, report, path, fmt='csv'):
        """
        Write a report to path

        Raises:
            UsageError: unknown format
            ReportIOError: the file could not be written
        """
        if fmt not in REPORT_FORMATS:
            raise UsageError(f"format must be one of {REPORT_FORMATS}, got {fmt!r}")
        path = Path(path)
        try:
            if fmt == 'csv':
                self._write_csv(report, path)
            else:
                self._write_json(report, path)
        except OSError as e:
            raise ReportIOError(f"could not write report: {e.strerror or e}", path) from e
        logger.info(f"wrote {fmt} report with {len(report.records)} checks to {path}")

    def _write_csv(self, report, path):
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(CHECK_HEADER)
            for record in report.records:
                writer.writerow([record.name, record.anchor, _number(record.error),
                                 _number(record.tolerance), 'true' if record.passed else 'false', record.ns])
                if record.note:
                    # no note column; JSON and the log carry it
                    logger.info(f"{record.name}: {record.note}")
        if report.bench:
            with open(bench_path(path), 'w', encoding='utf-8', newline='') as f:
                writer = csv.writer(f, lineterminator='\n')
                writer.writerow(BENCH_HEADER)
                for record in report.bench:
                    writer.writerow(record.as_row())

    def _write_json(self, report, path):
        document = {
            'summary': report.summary,
            'checks': [
                {
                    'check': record.name,
                    'anchor': record.anchor,
                    'error': _json_number(record.error),
                    'tolerance': _json_number(record.tolerance),
                    'pass': record.passed,
                    'ns': record.ns,
                    'note': record.note,
                }
                for record in report.records
            ],
            'bench': [
                {
                    'n': record.n,
                    'direct_ns': record.direct_ns,
                    'spectral_ns': record.spectral_ns,
                    'ratio': record.ratio,
                    'repetitions': record.repetitions,
                }
                for record in report.bench
            ],
        }
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(document, f, indent=2, ensure_ascii=False)
            f.write('\n')

    def load_report(self, path):
        """Parse an emitted JSON report back into a dict"""
        path = Path(path)
        try:
            with open(path, encoding='utf-8') as f:
                return json.load(f)
        except OSError as e:
            raise ReportIOError(f"could not read report: {e.strerror or e}", path) from e
        except json.JSONDecodeError as e:
            raise ReportIOError(f"report is not valid JSON: {e.msg}", path) from e


# Global store instance
report_store = ReportStore()


def emit_report(report, path, fmt='csv'):
    report_store.emit_report(report, path, fmt)


def load_report(path):
    return report_store.load_report(path)
