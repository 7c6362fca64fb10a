"""Deterministic check reports for the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INDETERMINATE_STATUS = "indeterminate"


@dataclass(frozen=True)
class Check:
    """One verified statement: identifier, outcome, parameters, witness text."""

    check_id: str
    status: str
    params: tuple = ()
    witness: str = ""

    def line(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params)
        return "\t".join((self.check_id, self.status, params, self.witness))


@dataclass
class Report:
    """An ordered bundle of checks from one suite run."""

    suite: str
    params: tuple = ()
    checks: list = field(default_factory=list)

    def add(self, check_id: str, ok, params=(), witness: str = "") -> Check:
        if ok is True:
            status = PASS
        elif ok is False:
            status = FAIL
        else:
            status = INDETERMINATE_STATUS
        check = Check(check_id, status, tuple(params), witness)
        self.checks.append(check)
        return check

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)

    @property
    def overall(self) -> str:
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return FAIL
        if INDETERMINATE_STATUS in statuses:
            return INDETERMINATE_STATUS
        return PASS

    def text(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params)
        lines = [f"suite\t{self.suite}\t{params}\toverall={self.overall}"]
        lines.extend(c.line() for c in self.checks)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "params": {k: v for k, v in self.params},
            "overall": self.overall,
            "checks": [
                {"id": c.check_id, "status": c.status,
                 "params": {k: v for k, v in c.params}, "witness": c.witness}
                for c in self.checks
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
