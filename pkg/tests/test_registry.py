import math

import pytest

from config import SUITES
from spectral.errors import UsageError
from suites.registry import (
    INFORMATIONAL,
    Check,
    CheckOutcome,
    Suite,
    SuiteConfig,
    SuiteRegistry,
    check,
    execute_check,
    list_checks,
    run_suites,
)


@pytest.mark.parametrize('kwargs', [
    {'suites': ()},
    {'suites': ('dft', 'fourier')},
    {'seed': -1},
    {'format': 'xml'},
    {'workers': 0},
    {'suites': ('bench',), 'sizes': (64, 100)},
    {'suites': ('bench',), 'sizes': ()},
])
def test_config_validation(kwargs):
    with pytest.raises(UsageError):
        SuiteConfig(**kwargs)


def test_sizes_only_validated_for_bench():
    assert SuiteConfig(suites=('loss',), sizes=(3, 2)).sizes == (3, 2)


def test_ordered_suites_follow_registration():
    config = SuiteConfig(suites=['laplace', 'dft', 'laplace'])
    assert config.ordered_suites == ['dft', 'laplace']
    assert SuiteConfig().ordered_suites == list(SUITES)


class TinySuite(Suite):
    name = 'tiny'

    @check('tiny.second_defined_first', 'ordering', 1.0)
    def zeta(self, rng):
        return 0.5

    @check('tiny.note', 'ordering', INFORMATIONAL)
    def alpha(self, rng):
        return CheckOutcome(3.0, 'just a note')

    def helper(self):
        return 'not a check'


def test_checks_follow_definition_order():
    names = [item.name for item in TinySuite(SuiteConfig()).checks()]
    assert names == ['tiny.second_defined_first', 'tiny.note']


def test_execute_check_outcomes():
    config = SuiteConfig(suites=('loss',))
    first, second = TinySuite(config).checks()
    record, bench = execute_check(first, config)
    assert (record.error, record.passed, bench) == (0.5, True, ())
    record, _ = execute_check(second, config)
    assert record.passed and record.informational and record.note == 'just a note'


def test_raising_check_is_recorded_as_failure():
    def boom(rng):
        raise ValueError('boom')

    record, _ = execute_check(Check('x.raise', 'anchor', 1.0, boom), SuiteConfig(suites=('loss',)))
    assert math.isinf(record.error)
    assert not record.passed
    assert record.note == 'ValueError: boom'


def test_zero_tolerance_forces_failure():
    config = SuiteConfig(suites=('loss',), tolerance_overrides={'loss.bce_examples': 0.0})
    report = run_suites(config)
    assert [r.name for r in report.failures()] == ['loss.bce_examples']
    assert report.get_record('loss.bce_examples').tolerance == 0.0


def test_unknown_override_is_usage_error():
    with pytest.raises(UsageError):
        run_suites(SuiteConfig(suites=('loss',), tolerance_overrides={'loss.nope': 1.0}))


def test_same_seed_same_values():
    first = run_suites(SuiteConfig(suites=('loss', 'pooling'), seed=42))
    second = run_suites(SuiteConfig(suites=('loss', 'pooling'), seed=42, workers=4))
    assert first.values() == second.values()
    names = [r.name for r in first.records]
    assert names[0].startswith('pool.') and names[-1].startswith('loss.')


def test_registry_loads_by_module_name():
    registry = SuiteRegistry()
    registry.load(['loss', 'laplace'])
    assert set(registry.suites) == {'loss', 'laplace'}


def test_list_checks():
    rows = list_checks(SuiteConfig(suites=('loss', 'bench'), sizes=(64, 128)))
    names = [name for _, name, _, _ in rows]
    assert names[0] == 'loss.bce_examples'
    assert names[-2:] == ['bench.n64', 'bench.n128']
    assert all(suite in ('loss', 'bench') for suite, _, _, _ in rows)
