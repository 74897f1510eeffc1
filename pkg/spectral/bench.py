"""
Direct vs spectral 1D convolution timing sweep

Every size is gated on agreement with the direct oracle before any timing is
taken; timings are medians of at least five monotonic-clock runs.
"""
import logging
import time
from dataclasses import dataclass

import numpy as np

from config import BENCH_SETTINGS
from spectral.conv_spectral import ConvPlan, conv_direct_1d, conv_spectral_1d
from spectral.errors import CorrectnessError, UsageError
from spectral.signals import RealSignal1D, is_power_of_two, seeded_generator, uniform_samples

logger = logging.getLogger('bench')

MIN_REPETITIONS = 5


@dataclass(frozen=True)
class BenchRecord:
    n: int
    direct_ns: int
    spectral_ns: int
    ratio: float
    repetitions: int
    max_error: float = 0.0

    def as_row(self):
        return [self.n, self.direct_ns, self.spectral_ns, f"{self.ratio:.6g}", self.repetitions]


def validate_sizes(sizes):
    """Sizes must be strictly increasing powers of two"""
    sizes = list(sizes)
    if not sizes:
        raise UsageError("bench needs at least one size")
    for n in sizes:
        if not is_power_of_two(n):
            raise UsageError(f"bench size {n} is not a power of two")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise UsageError(f"bench sizes must be strictly increasing, got {sizes}")
    return sizes


def median_ns(func, repetitions):
    """Median wall time of func() over the given number of runs"""
    samples = []
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        func()
        samples.append(time.perf_counter_ns() - start)
    return int(np.median(samples))


def bench_size(n, seed, repetitions=BENCH_SETTINGS['repetitions']):
    """
    Time both convolution paths on one random length-n pair

    Raises:
        CorrectnessError: spectral output disagrees with the direct oracle
    """
    repetitions = max(repetitions, MIN_REPETITIONS)
    rng = seeded_generator(seed, f"bench.n{n}")
    f = RealSignal1D(uniform_samples(rng, n))
    g = RealSignal1D(uniform_samples(rng, n))
    plan = ConvPlan.for_signals(f, g)

    reference = conv_direct_1d(f, g).samples
    candidate = conv_spectral_1d(f, g, plan).samples
    max_error = float(np.max(np.abs(candidate - reference)))
    bound = BENCH_SETTINGS['gate_factor'] * (2 * n - 1)
    if not max_error <= bound:
        raise CorrectnessError(f"spectral convolution off by {max_error:.3e} at n={n} (bound {bound:.3e})",
                               max_error=max_error)

    direct_ns = median_ns(lambda: conv_direct_1d(f, g), repetitions)
    spectral_ns = median_ns(lambda: conv_spectral_1d(f, g, plan), repetitions)
    ratio = direct_ns / max(spectral_ns, 1)
    logger.info(f"n={n}: direct {direct_ns} ns, spectral {spectral_ns} ns, ratio {ratio:.3f}")
    return BenchRecord(n, direct_ns, spectral_ns, ratio, repetitions, max_error)


def log_ratio_trend(records):
    """Warn where the direct/spectral ratio fails to grow with n; never raises"""
    for smaller, larger in zip(records, records[1:]):
        if larger.ratio <= smaller.ratio:
            logger.warning(f"direct/spectral ratio did not grow from n={smaller.n} "
                           f"({smaller.ratio:.3f}) to n={larger.n} ({larger.ratio:.3f})")


def run_bench(config):
    """Sweep config.sizes with config.seed, one BenchRecord per size"""
    sizes = validate_sizes(config.sizes)
    records = [bench_size(n, config.seed) for n in sizes]
    log_ratio_trend(records)
    return records
