"""
Data models for verification results.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List

PASS = 'pass'
FAIL = 'fail'


@dataclass
class CheckResult:
    """Outcome of one verification check."""
    name: str
    anchor: str
    n_range: str
    status: str = PASS
    detail: str = ''

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def summary(self) -> str:
        """One-line human-readable description of the outcome."""
        line = f"[{self.status.upper()}] {self.name} ({self.anchor}; {self.n_range})"
        return f"{line}: {self.detail}" if self.detail else line

    def to_json(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'anchor': self.anchor,
            'n_range': self.n_range,
            'status': self.status,
            'detail': self.detail,
        }


@dataclass
class VerificationReport:
    suite: str
    max_n: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed_count(self) -> int:
        return sum(1 for check in self.checks if check.passed)

    @property
    def failed_count(self) -> int:
        return len(self.checks) - self.passed_count

    @property
    def passed(self) -> bool:
        return self.failed_count == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_json(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'max_n': self.max_n,
            'summary': {
                'total': len(self.checks),
                'passed': self.passed_count,
                'failed': self.failed_count,
            },
            'checks': [check.to_json() for check in self.checks],
        }
