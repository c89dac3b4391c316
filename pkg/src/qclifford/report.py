"""Relation results and suite reports shared by the verification suites and the CLI."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class RelationResult:
    name: str
    anchor: str
    status: str
    counterexample: Optional[Dict[str, Any]] = None
    wall_time: float = 0.0
    detail: Optional[Dict[str, Any]] = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self, timings: bool = True) -> dict:
        out: Dict[str, Any] = {"name": self.name, "anchor": self.anchor, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail is not None:
            out["detail"] = self.detail
        if timings:
            out["wall_time"] = round(self.wall_time, 6)
        return out


@dataclass
class SuiteReport:
    suite: str
    params: Dict[str, Any]
    relations: List[RelationResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.relations)

    def failures(self) -> List[RelationResult]:
        return [r for r in self.relations if not r.ok]

    def add(self, result: RelationResult) -> RelationResult:
        self.relations.append(result)
        return result

    def extend(self, other: "SuiteReport") -> None:
        self.relations.extend(other.relations)

    def check(self, name: str, anchor: str, fn: Callable[[], Optional[dict]]) -> RelationResult:
        """Run ``fn``; it returns ``None`` on success or a counterexample dict."""
        t0 = time.perf_counter()
        cex = fn()
        dt = time.perf_counter() - t0
        status = PASS if cex is None else FAIL
        return self.add(RelationResult(name, anchor, status, cex, dt))

    def skip(self, name: str, anchor: str, reason: str) -> RelationResult:
        return self.add(RelationResult(name, anchor, SKIPPED, None, 0.0, {"reason": reason}))

    def to_json(self, timings: bool = True) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "relations": [r.to_json(timings) for r in self.relations],
        }

    def summary(self) -> str:
        n = len(self.relations)
        bad = len(self.failures())
        return f"{self.suite}: {n - bad}/{n} relations pass"


@contextmanager
def stopwatch():
    box = {"t": 0.0}
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box["t"] = time.perf_counter() - t0
