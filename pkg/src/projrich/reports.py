"""Verification reports shared by the checking routines and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

__all__ = ["Report", "to_jsonable"]

MAX_RECORDED_FAILURES = 50


@dataclass
class Report:
    """Outcome of one exhaustive check.

    ``failures`` keeps at most ``MAX_RECORDED_FAILURES`` entries, while
    ``n_failed`` counts all of them.
    """
    theorem: str
    instance: str
    n_checked: int = 0
    n_failed: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.n_failed == 0

    def check(self, ok: bool, **detail) -> bool:
        self.n_checked += 1
        if not ok:
            self.fail(**detail)
        return ok

    def fail(self, **detail) -> None:
        self.n_failed += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append({k: to_jsonable(v) for k, v in detail.items()})

    def merge(self, other: "Report") -> None:
        self.n_checked += other.n_checked
        self.n_failed += other.n_failed
        room = MAX_RECORDED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "n_checked": self.n_checked,
            "n_failed": self.n_failed,
            "passed": self.passed,
            "failures": self.failures,
            "notes": {k: to_jsonable(v) for k, v in self.notes.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.theorem} [{self.instance}] checked={self.n_checked} failed={self.n_failed}"


def to_jsonable(v: Any) -> Any:
    """Best-effort conversion of group elements and polynomials for JSON."""
    from .coxeter import AffineElt, WeylElt, element_to_json
    from .polynomials import _Sparse
    if isinstance(v, (WeylElt, AffineElt)):
        return element_to_json(v)
    if isinstance(v, _Sparse):
        return v.serialize()
    if isinstance(v, (list, tuple)):
        return [to_jsonable(x) for x in v]
    if isinstance(v, (frozenset, set)):
        return sorted(to_jsonable(x) for x in v)
    if isinstance(v, dict):
        return {str(k): to_jsonable(x) for k, x in v.items()}
    return v
