import csv
import logging
import math

import pytest

from reports.report_store import BENCH_HEADER, CHECK_HEADER, bench_path, emit_report, load_report
from reports.verification_report import CheckRecord, VerificationReport
from spectral.bench import BenchRecord
from spectral.errors import ReportIOError, UsageError


def _report(*records):
    report = VerificationReport()
    for record in records:
        report.add_record(record)
    return report


def _record(name, error=1e-13, tolerance=1e-12, note=''):
    return CheckRecord(name, 'anchor, with comma', error, tolerance, error < tolerance, 1234, note)


def test_summary_tallies():
    report = _report(_record('a'), _record('b', error=1.0), _record('c', tolerance=math.inf))
    assert report.summary == {'total': 3, 'passed': 2, 'failed': 1}
    assert not report.all_passed
    assert [r.name for r in report.failures()] == ['b']
    assert report.get_record('c').informational
    assert report.get_record('missing') is None
    report.reset()
    assert report.summary == {'total': 0, 'passed': 0, 'failed': 0}
    assert report.all_passed


def test_empty_report_is_header_only(tmp_path):
    path = tmp_path / 'report.csv'
    emit_report(VerificationReport(), path)
    assert path.read_text(encoding='utf-8') == 'check,anchor,error,tolerance,pass,ns\n'
    assert not bench_path(path).exists()


def test_three_checks_give_four_lines(tmp_path):
    path = tmp_path / 'report.csv'
    emit_report(_report(_record('a'), _record('b', error=2.0), _record('c', tolerance=math.inf)), path)
    text = path.read_text(encoding='utf-8')
    assert text.endswith('\n')
    lines = text.splitlines()
    assert len(lines) == 4
    rows = list(csv.reader(lines))
    assert rows[0] == CHECK_HEADER
    assert rows[1] == ['a', 'anchor, with comma', '1e-13', '1e-12', 'true', '1234']
    assert rows[2][4] == 'false'
    assert rows[3][3] == 'inf'


def test_bench_rows_go_to_sibling_file(tmp_path):
    report = _report(_record('bench.n64'))
    report.add_bench(BenchRecord(64, 900, 300, 3.0, 5))
    path = tmp_path / 'out.csv'
    emit_report(report, path)
    sibling = tmp_path / 'out.bench.csv'
    assert bench_path(path) == sibling
    assert sibling.read_text(encoding='utf-8').splitlines() == [','.join(BENCH_HEADER), '64,900,300,3,5']


def test_json_round_trip(tmp_path):
    report = _report(_record('a'), _record('b', error=math.inf, note='DomainError: x'))
    report.add_bench(BenchRecord(64, 900, 300, 3.0, 5))
    path = tmp_path / 'report.json'
    emit_report(report, path, 'json')
    document = load_report(path)
    assert document['summary'] == report.summary
    assert [c['check'] for c in document['checks']] == ['a', 'b']
    assert document['checks'][1]['error'] == 'inf'
    assert document['checks'][1]['note'] == 'DomainError: x'
    assert document['bench'][0]['n'] == 64
    assert path.read_text(encoding='utf-8').endswith('}\n')


def test_unknown_format(tmp_path):
    with pytest.raises(UsageError):
        emit_report(VerificationReport(), tmp_path / 'r.xml', 'xml')


def test_unwritable_path_carries_path(tmp_path):
    path = tmp_path / 'missing' / 'report.csv'
    with pytest.raises(ReportIOError) as excinfo:
        emit_report(VerificationReport(), path)
    assert excinfo.value.path == path
    assert str(path) in str(excinfo.value)


def test_load_report_errors(tmp_path):
    with pytest.raises(ReportIOError):
        load_report(tmp_path / 'absent.json')
    broken = tmp_path / 'broken.json'
    broken.write_text('{not json', encoding='utf-8')
    with pytest.raises(ReportIOError):
        load_report(broken)


def test_csv_notes_go_to_the_log(tmp_path, caplog):
    report = _report(_record('lap.relu_printed_form', error=0.4, tolerance=math.inf,
                             note='printed -1.2 vs verified 0.26'), _record('quiet'))
    with caplog.at_level(logging.INFO, logger='report_store'):
        emit_report(report, tmp_path / 'report.csv')
    assert 'lap.relu_printed_form: printed -1.2 vs verified 0.26' in caplog.text
    assert 'quiet:' not in caplog.text
