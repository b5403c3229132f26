"""Structured check results.

A ``Report`` is a list of ``Check`` s. Failures are data: each failing
check carries a witness (the first basis element, in ascending order, on
which the two sides of the identity differ, plus both values).
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    id: str
    law: str
    passed: bool
    witness: dict | None = None
    checked: int = 0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        d = {"id": self.id, "law": self.law, "status": self.status, "checked": self.checked}
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        return cls(d["id"], d["law"], d["status"] == "pass", d.get("witness"), d.get("checked", 0))

    def line(self) -> str:
        s = "[%s] %-34s %s" % (self.status.upper(), self.id, self.law)
        if self.witness is not None:
            s += "\n       witness: %s" % (self.witness,)
        return s


@dataclass
class Report:
    name: str
    checks: list = field(default_factory=list)
    mode: str | None = None
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def __getitem__(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def __contains__(self, check_id) -> bool:
        return any(c.id == check_id for c in self.checks)

    def to_dict(self) -> dict:
        d = {"report": self.name, "status": "pass" if self.passed else "fail"}
        if self.mode is not None:
            d["mode"] = self.mode
        if self.info:
            d["info"] = self.info
        d["checks"] = [c.to_dict() for c in self.checks]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["report"], [Check.from_dict(c) for c in d["checks"]], d.get("mode"), d.get("info", {}))

    def __str__(self):
        head = "%s: %s" % (self.name, "PASS" if self.passed else "FAIL")
        if self.mode:
            head += " (%s)" % self.mode
        return "\n".join([head] + ["  " + c.line() for c in self.checks])


class CertificationError(Exception):
    """A structure failed one of its defining identities."""

    def __init__(self, report: Report):
        self.report = report
        bad = report.first_failure()
        msg = "%s rejected" % report.name
        if bad is not None:
            msg += ": %s fails (%s)" % (bad.id, bad.law)
            if bad.witness:
                msg += ", witness %s" % (bad.witness.get("basis"),)
        super().__init__(msg)
