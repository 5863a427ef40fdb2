"""Check records and reports with a deterministic JSON form."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__

SCHEMA = "1"
STATUSES = ("pass", "fail", "uncertified")


@dataclass(frozen=True)
class CheckRecord:
    id: str
    subject: str
    status: str
    expected: Any = None
    actual: Any = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @classmethod
    def compare(cls, id: str, subject: str, expected: Any, actual: Any, note: str = "") -> CheckRecord:
        return cls(id, subject, "pass" if expected == actual else "fail",
                   _jsonable(expected), _jsonable(actual), note)


def _jsonable(x: Any) -> Any:
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


@dataclass
class Report:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)
    version: str = __version__
    timestamp: str | None = None

    def extend(self, recs) -> None:
        self.records.extend(recs)

    @property
    def summary(self) -> dict[str, int]:
        cnt = Counter(r.status for r in self.records)
        return {s: cnt.get(s, 0) for s in STATUSES} | {"total": len(self.records)}

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.records)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "schema": SCHEMA,
            "suite": self.suite,
            "version": self.version,
            "summary": self.summary,
            "records": [asdict(r) for r in self.records],
        }
        if self.timestamp is not None:
            d["timestamp"] = self.timestamp
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Report:
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {d.get('schema')!r}")
        return cls(d["suite"], [CheckRecord(**r) for r in d["records"]],
                   d["version"], d.get("timestamp"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (minuscule-lab {self.version})"]
        if self.timestamp:
            lines.append(f"generated {self.timestamp}")
        for r in self.records:
            line = f"{r.status.upper():<11} {r.id:<34} {r.subject}"
            if r.status != "pass":
                line += f"  expected={r.expected!r} actual={r.actual!r}"
            if r.note:
                line += f"  [{r.note}]"
            lines.append(line)
        s = self.summary
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, "
                     f"{s['uncertified']} uncertified, {s['total']} total")
        return "\n".join(lines) + "\n"
