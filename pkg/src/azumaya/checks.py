"""Pass/fail records shared by all verification suites."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    """One named check; ``witness`` points at the first failing tuple."""

    name: str
    passed: bool
    witness: str | None = None


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)


def failures(results: list[CheckResult]) -> list[CheckResult]:
    return [r for r in results if not r.passed]
