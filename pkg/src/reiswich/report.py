"""Verification reports: flat lists of (check id, status, witness) records."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)
    sort_key: tuple = field(default=(), compare=False, repr=False)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict[str, Any]:
        return {"id": self.check_id, "status": self.status, "witness": self.witness}


class VerificationReport:
    """Ordered collection of check records; violations are entries, not exceptions."""

    def __init__(self, name: str, records: Iterable[CheckRecord] = ()):
        self.name = name
        self.records: list[CheckRecord] = list(records)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    def extend(self, other: VerificationReport | Iterable[CheckRecord]) -> None:
        if isinstance(other, VerificationReport):
            other = other.records
        self.records.extend(other)

    def sort(self) -> None:
        self.records.sort(key=lambda rec: (rec.sort_key, rec.check_id))

    @property
    def passed(self) -> bool:
        return all(rec.passed for rec in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [rec for rec in self.records if not rec.passed]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "total": len(self.records),
            "failed": len(self.failures),
            "checks": [rec.to_json() for rec in self.records],
        }
