"""Verification reports: named exact checks with residual certificates."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable


def is_zero(value) -> bool:
    if hasattr(value, "is_zero"):
        return value.is_zero()
    return value == 0


def _force(value):
    return value() if callable(value) else value


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    passed: bool
    residual: str = "0"
    seconds: float = 0.0

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def machine_line(self) -> str:
        return "\t".join((self.status, self.name, self.anchor, self.residual))

    def human_line(self) -> str:
        line = f"[{self.status}] {self.name}  ({self.anchor})"
        if not self.passed:
            line += f"\n        residual: {self.residual}"
        return line


@dataclass
class Report:
    """An ordered list of check results; ``ok`` iff every check passed."""

    title: str = ""
    checks: list[CheckResult] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __len__(self):
        return len(self.checks)

    def __iter__(self):
        return iter(self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def check(self, name: str, anchor: str, lhs, rhs=None) -> CheckResult:
        """Record ``lhs == rhs``; either side may be a zero-argument callable.

        The residual ``lhs - rhs`` is the certificate printed on failure; with
        no ``rhs`` the check asserts that ``lhs`` itself vanishes.
        """
        start = time.perf_counter()
        try:
            residual = _force(lhs) if rhs is None else _force(lhs) - _force(rhs)
            passed = is_zero(residual)
            text = "0" if passed else str(residual)
        except Exception as exc:  # a failing check must not abort the whole report
            passed, text = False, f"error: {type(exc).__name__}: {exc}"
        result = CheckResult(name, anchor, passed, text, time.perf_counter() - start)
        self.checks.append(result)
        return result

    def record(self, name: str, anchor: str, passed: bool, residual: str = "0",
               seconds: float = 0.0) -> CheckResult:
        if not passed and (not residual or residual == "0"):
            raise ValueError("a failing check needs a nonzero residual")
        result = CheckResult(name, anchor, passed, "0" if passed else residual, seconds)
        self.checks.append(result)
        return result

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(CheckResult(prefix + c.name, c.anchor, c.passed, c.residual, c.seconds))
        self.witnesses.update(other.witnesses)
        return self

    def machine(self) -> str:
        return "\n".join(c.machine_line() for c in self.checks)

    def __str__(self):
        head = [self.title] if self.title else []
        return "\n".join(head + [c.human_line() for c in self.checks])


def timed(fn: Callable, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start
