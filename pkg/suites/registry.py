"""
Suite registry and runner

Each suite module defines one Suite subclass and ends with setup(registry),
the way command groups register themselves. Checks run on a thread pool;
results are merged back in registration order so the worker count never
changes the report.
"""
import asyncio
import importlib
import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, NamedTuple, Tuple

from config import BENCH_SETTINGS, DEFAULT_FORMAT, DEFAULT_OUTPUT, DEFAULT_SEED, REPORT_FORMATS, SUITES, WORKERS
from reports.verification_report import CheckRecord, VerificationReport
from spectral.bench import log_ratio_trend, validate_sizes
from spectral.errors import CorrectnessError, UsageError
from spectral.signals import seeded_generator

logger = logging.getLogger('suites')

INFORMATIONAL = math.inf


class CheckOutcome(NamedTuple):
    error: float
    note: str = ''
    bench: tuple = ()


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    tolerance: float
    func: Callable
    exclusive: bool = False


def check(name, anchor, tolerance):
    """Mark a Suite method as a check; it receives a seeded generator"""
    def decorator(method):
        method.check_meta = (name, anchor, tolerance)
        return method
    return decorator


class Suite:
    """Base class: subclasses set name and decorate methods with @check"""

    name = ''
    exclusive = False

    def __init__(self, config):
        self.config = config

    def checks(self):
        found = []
        for attr in type(self).__dict__.values():
            meta = getattr(attr, 'check_meta', None)
            if meta is not None:
                found.append(Check(*meta, func=attr.__get__(self), exclusive=self.exclusive))
        return found


@dataclass(frozen=True)
class SuiteConfig:
    suites: Tuple[str, ...] = tuple(SUITES)
    seed: int = DEFAULT_SEED
    tolerance_overrides: Dict[str, float] = field(default_factory=dict)
    sizes: Tuple[int, ...] = tuple(BENCH_SETTINGS['sizes'])
    output_path: str = DEFAULT_OUTPUT
    format: str = DEFAULT_FORMAT
    workers: int = WORKERS

    def __post_init__(self):
        object.__setattr__(self, 'suites', tuple(self.suites))
        object.__setattr__(self, 'sizes', tuple(self.sizes))
        if not self.suites:
            raise UsageError("select at least one suite")
        unknown = [name for name in self.suites if name not in SUITES]
        if unknown:
            raise UsageError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
        if self.seed < 0:
            raise UsageError(f"seed must be an unsigned integer, got {self.seed}")
        if self.format not in REPORT_FORMATS:
            raise UsageError(f"format must be one of {REPORT_FORMATS}, got {self.format!r}")
        if self.workers < 1:
            raise UsageError(f"workers must be at least 1, got {self.workers}")
        if 'bench' in self.suites:
            validate_sizes(self.sizes)

    @property
    def ordered_suites(self):
        """Selected suites in registration order, duplicates dropped"""
        return [name for name in SUITES if name in self.suites]


class SuiteRegistry:
    def __init__(self):
        self.suites = {}

    def add_suite(self, suite_cls):
        self.suites[suite_cls.name] = suite_cls

    def load(self, names):
        """Import suite modules by dotted name and let each register itself"""
        for name in names:
            module_name = SUITES[name]
            try:
                module = importlib.import_module(module_name)
                module.setup(self)
                logger.debug(f"✅ Loaded {module_name}")
            except Exception as e:
                logger.error(f"❌ Failed to load {module_name}: {e}")
                raise

    def collect(self, config):
        self.load(config.ordered_suites)
        checks = []
        for name in config.ordered_suites:
            checks.extend(self.suites[name](config).checks())
        known = {c.name for c in checks}
        unknown = sorted(set(config.tolerance_overrides) - known)
        if unknown:
            raise UsageError(f"tolerance override for unknown check(s): {', '.join(unknown)}")
        return checks


def execute_check(item, config):
    """
    Run one check; a raised exception becomes a failed record with error inf

    Raises:
        CorrectnessError: from an exclusive (bench) check, which aborts the run
    """
    rng = seeded_generator(config.seed, item.name)
    tolerance = config.tolerance_overrides.get(item.name, item.tolerance)
    start = time.perf_counter_ns()
    try:
        outcome = item.func(rng)
        if not isinstance(outcome, CheckOutcome):
            outcome = CheckOutcome(float(outcome))
    except Exception as e:
        if item.exclusive and isinstance(e, CorrectnessError):
            logger.error(f"❌ {item.name} aborted the bench: {e}")
            raise
        logger.warning(f"check {item.name} raised {type(e).__name__}: {e}")
        outcome = CheckOutcome(math.inf, f"{type(e).__name__}: {e}")
    elapsed = time.perf_counter_ns() - start
    error = float(outcome.error)
    record = CheckRecord(item.name, item.anchor, error, float(tolerance), error < tolerance, elapsed, outcome.note)
    return record, outcome.bench


async def _execute_all(checks, config):
    semaphore = asyncio.Semaphore(config.workers)

    async def run_one(item):
        async with semaphore:
            return await asyncio.to_thread(execute_check, item, config)

    shared = [i for i, item in enumerate(checks) if not item.exclusive]
    results = dict(zip(shared, await asyncio.gather(*(run_one(checks[i]) for i in shared))))
    # timing checks run alone, after everything else
    for i, item in enumerate(checks):
        if item.exclusive:
            results[i] = execute_check(item, config)
    return [results[i] for i in range(len(checks))]


def run_suites(config, registry=None):
    """
    Execute every check of the selected suites

    Args:
        config (SuiteConfig): selection, seed, overrides, bench sizes, workers
        registry (SuiteRegistry): optional pre-populated registry

    Returns:
        VerificationReport: records in registration order
    """
    registry = registry or SuiteRegistry()
    checks = registry.collect(config)
    logger.info(f"running {len(checks)} checks from {', '.join(config.ordered_suites)} "
                f"with seed {config.seed} on {config.workers} worker(s)")
    report = VerificationReport()
    for record, bench in asyncio.run(_execute_all(checks, config)):
        report.add_record(record)
        for row in bench:
            report.add_bench(row)
    if report.bench:
        log_ratio_trend(report.bench)
    return report


def list_checks(config):
    """(suite, check, anchor, tolerance) for every check the config would run"""
    registry = SuiteRegistry()
    registry.load(config.ordered_suites)
    rows = []
    for name in config.ordered_suites:
        for item in registry.suites[name](config).checks():
            rows.append((name, item.name, item.anchor, item.tolerance))
    return rows
