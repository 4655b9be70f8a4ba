"""Verification reports and the sampling policy shared by every checker."""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Iterator


@dataclass(frozen=True)
class SampleBudget:
    """Exhaustive below ``limit`` instances per axiom, seeded sampling above."""

    limit: int = 5000
    seed: int = 0
    samples: int | None = None

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


@dataclass
class AxiomResult:
    name: str
    citation: str
    instances: int
    passed: bool
    coverage: str = "exhaustive"
    counterexample: str | None = None
    group: str = ""
    instance: str | None = None


@dataclass
class Report:
    title: str = ""
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, result: AxiomResult) -> AxiomResult:
        self.results.append(result)
        return result

    def extend(self, other: "Report") -> "Report":
        self.results.extend(other.results)
        return self

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def get(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {"title": self.title, "results": [asdict(r) for r in self.results]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Report":
        return cls(data.get("title", ""), [AxiomResult(**r) for r in data.get("results", [])])

    def summary(self) -> str:
        lines = [self.title] if self.title else []
        for r in self.results:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"{mark} {r.name} ({r.instances} {r.coverage})")
            if r.counterexample:
                lines.append(f"    {r.counterexample}")
            if r.instance:
                lines.append(f"    instance: {r.instance}")
        return "\n".join(lines)


def _clip(x: Any, width: int = 400) -> str:
    s = repr(x)
    return s if len(s) <= width else s[: width - 3] + "..."


Check = Callable[[Any], "str | None"]


def instances(
    exhaustive: Callable[[], Iterable[Any]] | None,
    sampler: Callable[[random.Random], Any] | None,
    budget: SampleBudget,
    salt: str,
) -> tuple[Iterator[Any], str]:
    """Pick the instance stream for one axiom according to the budget."""
    if exhaustive is not None:
        head = list(itertools.islice(exhaustive(), budget.limit + 1))
        if len(head) <= budget.limit or sampler is None:
            return iter(head[: budget.limit]), "exhaustive" if len(head) <= budget.limit else "truncated"
    if sampler is None:
        return iter(()), "exhaustive"
    rng = budget.rng(salt)
    n = budget.samples if budget.samples is not None else budget.limit

    def gen():
        for _ in range(n):
            inst = sampler(rng)
            if inst is not None:
                yield inst

    return gen(), "sampled"


def run_axiom(
    report: Report,
    name: str,
    citation: str,
    check: Check,
    budget: SampleBudget,
    exhaustive: Callable[[], Iterable[Any]] | None = None,
    sampler: Callable[[random.Random], Any] | None = None,
    group: str = "",
) -> AxiomResult:
    """Evaluate ``check`` on every instance; stop at the first counterexample."""
    stream, coverage = instances(exhaustive, sampler, budget, name)
    count = 0
    for inst in stream:
        count += 1
        try:
            bad = check(inst)
        except Exception as exc:  # failures are data
            bad = f"{type(exc).__name__}: {exc}"
        if bad is not None:
            return report.add(AxiomResult(name, citation, count, False, coverage, bad, group, _clip(inst)))
    return report.add(AxiomResult(name, citation, count, True, coverage, None, group))
