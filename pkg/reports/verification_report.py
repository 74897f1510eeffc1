"""
Verification Report
Per-check records and bench rows collected by a suite run
"""
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CheckRecord:
    """One executed check: measured error against its tolerance"""

    name: str
    anchor: str
    error: float
    tolerance: float
    passed: bool
    ns: int
    note: str = ''

    @property
    def informational(self):
        return math.isinf(self.tolerance)

    def values(self):
        """Every field except wall time, for reproducibility comparisons"""
        return (self.name, self.anchor, self.error, self.tolerance, self.passed, self.note)


class VerificationReport:
    """Ordered check records plus bench rows; summary is always derived"""

    def __init__(self):
        self.reset()

    def reset(self):
        self.records = []
        self.bench = []

    def add_record(self, record):
        self.records.append(record)

    def add_bench(self, record):
        self.bench.append(record)

    @property
    def summary(self):
        passed = sum(1 for record in self.records if record.passed)
        return {
            'total': len(self.records),
            'passed': passed,
            'failed': len(self.records) - passed,
        }

    @property
    def all_passed(self):
        return all(record.passed for record in self.records)

    def failures(self):
        return [record for record in self.records if not record.passed]

    def get_record(self, name):
        for record in self.records:
            if record.name == name:
                return record
        return None

    def values(self):
        return [record.values() for record in self.records]
