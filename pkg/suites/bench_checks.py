"""
Bench Checks - direct vs spectral convolution timing

One check per configured size. The recorded error is the gate error per
output sample; timings go to the bench table, never to the pass rule.
"""
from config import BENCH_SETTINGS
from spectral.bench import bench_size
from suites.registry import Check, CheckOutcome, Suite

BENCH = 'cost of direct vs spectral convolution'


class BenchChecks(Suite):
    name = 'bench'
    exclusive = True

    def checks(self):
        return [Check(f"bench.n{n}", BENCH, BENCH_SETTINGS['gate_factor'], self._size_check(n), exclusive=True)
                for n in self.config.sizes]

    def _size_check(self, n):
        def run(rng):
            record = bench_size(n, self.config.seed)
            return CheckOutcome(record.max_error / (2 * n - 1), bench=(record,))
        return run


def setup(registry):
    registry.add_suite(BenchChecks)
