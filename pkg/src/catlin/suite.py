"""Batch runners: seeded corpora pushed through the engine and the verifier.

The theorem suite sweeps G(n, p) graphs over every palette size that
satisfies the hypotheses; the base-case suite sweeps triangle-free
subcubic graphs and watches the augmentation loop itself.  Both produce
one :class:`RunRecord` per run, which the CLI serializes and the
acceptance tests aggregate.

Corpus derivation is part of the contract: instance i of a theorem
corpus rooted at ``seed`` uses n = 4 + (i mod 9), p = (1 + (i div 9)
mod 6) / 10 and instance seed ``derive_seed(seed, i)``; a base-case
corpus uses n = 4 + (i mod 17).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .engine import CatlinResult, catlin_color, trace_summary, validate_instance
from .errors import CapacityError, InternalInvariantViolation, PreconditionViolation
from .formats import encode_graph6
from .generate import derive_seed, gnp, random_triangle_free_subcubic
from .graph import Graph
from .solvers import brute_chromatic
from .verify import verify_catlin

SCHEMA_VERSION = 1

DEFAULT_SEED = 0xCA71
PALETTES = (3, 4, 5)
CHI_LIMIT = 12


@dataclass
class RunRecord:
    """Everything one engine run produced, JSON-ready via ``to_dict``."""

    index: int
    source: str
    n: int
    d: int
    outcome: str  # "ok" | "precondition" | "invariant" | "capacity"
    message: str | None = None
    big_class: int | None = None
    big_class_size: int | None = None
    colors_used: int | None = None
    alpha: int | None = None
    chi: int | None = None
    proper: bool | None = None
    catlin_ok: bool | None = None
    millis: float = 0.0
    cases: dict[str, int] = field(default_factory=dict)
    augmentations: int = 0
    fallbacks: int = 0
    alpha_checks: int = 0
    initial_odd_cycles: int = 0
    graph6: str | None = None

    @property
    def ok(self) -> bool:
        return self.outcome == "ok" and bool(self.catlin_ok)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "index": self.index,
            "source": self.source,
            "n": self.n,
            "d": self.d,
            "outcome": self.outcome,
            "message": self.message,
            "big_class": self.big_class,
            "big_class_size": self.big_class_size,
            "colors_used": self.colors_used,
            "alpha": self.alpha,
            "chi": self.chi,
            "proper": self.proper,
            "catlin_ok": self.catlin_ok,
            "millis": round(self.millis, 3),
            "cases": dict(self.cases),
            "augmentations": self.augmentations,
            "fallbacks": self.fallbacks,
            "graph6": self.graph6,
        }


@dataclass
class SuiteSummary:
    """Aggregate of one suite: counts plus the failing runs' graphs."""

    name: str
    records: list[RunRecord]
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "counterexamples": list(self.counterexamples),
            "ok": self.ok,
        }


def theorem_corpus(count: int, seed: int = DEFAULT_SEED) -> Iterator[tuple[str, Graph]]:
    """The seeded G(n, p) corpus; yields (descriptor, graph) pairs."""
    for i in range(count):
        n = 4 + i % 9
        p = (1 + (i // 9) % 6) / 10
        instance_seed = derive_seed(seed, i)
        yield f"gnp(n={n},p={p},seed={instance_seed})", gnp(n, p, instance_seed)


def base_case_corpus(
    count: int, seed: int = DEFAULT_SEED, max_n: int = 20
) -> Iterator[tuple[str, Graph]]:
    """The seeded triangle-free subcubic corpus for the base-case suite."""
    span = max_n - 3
    for i in range(count):
        n = 4 + i % span
        instance_seed = derive_seed(seed, i)
        yield (
            f"tfree(n={n},seed={instance_seed})",
            random_triangle_free_subcubic(n, instance_seed),
        )


def run_one(
    index: int,
    source: str,
    g: Graph,
    d: int,
    *,
    compute_chi: bool = False,
    corrupt: Callable[[Graph, CatlinResult], CatlinResult] | None = None,
) -> RunRecord:
    """Run validate + engine + verifier on one instance.

    ``corrupt`` is a fault-injection hook for testing the harness: it
    may tamper with the engine's result before verification, and the
    verifier is expected to catch it.  Not exposed on the command line.
    """
    record = RunRecord(index=index, source=source, n=g.n, d=d, outcome="ok")
    start = time.perf_counter()
    try:
        validate_instance(g, d)
    except PreconditionViolation as exc:
        record.outcome = "precondition"
        record.message = str(exc)
        record.millis = (time.perf_counter() - start) * 1000
        return record
    try:
        result = catlin_color(g, d)
        if corrupt is not None:
            result = corrupt(g, result)
        report = verify_catlin(g, result, d)
        record.big_class = result.big_class
        record.big_class_size = result.big_class_size
        record.colors_used = report.colors_used
        record.alpha = report.alpha
        record.proper = report.proper
        record.catlin_ok = report.catlin_ok
        if report.failures:
            record.message = "; ".join(report.failures)
        summary = trace_summary(result.trace)
        record.cases = summary["cases"]
        record.augmentations = summary["augmentations"]
        record.fallbacks = summary["fallbacks"]
        record.alpha_checks = summary["alpha_checks"]
        for step in result.trace:
            if step.case == "base":
                record.initial_odd_cycles = step.initial_odd_cycles
        if compute_chi and g.n <= CHI_LIMIT:
            record.chi = brute_chromatic(g)
            if record.chi > d:
                record.catlin_ok = False
                record.message = f"chromatic number {record.chi} exceeds {d}"
    except InternalInvariantViolation as exc:
        record.outcome = "invariant"
        record.message = str(exc)
    except CapacityError as exc:
        record.outcome = "capacity"
        record.message = str(exc)
    record.millis = (time.perf_counter() - start) * 1000
    if not record.ok and record.outcome != "precondition":
        record.graph6 = encode_graph6(g)
    return record


def run_theorem_suite(
    count: int = 10_000,
    seed: int = DEFAULT_SEED,
    palettes: tuple[int, ...] = PALETTES,
    *,
    compute_chi: bool = True,
    corrupt: Callable[[Graph, CatlinResult], CatlinResult] | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> SuiteSummary:
    """Sweep the G(n, p) corpus over every palette size that validates."""
    summary = SuiteSummary("theorem", [])
    for i, (source, g) in enumerate(theorem_corpus(count, seed)):
        if progress is not None:
            progress(i, count)
        for d in palettes:
            record = run_one(
                i, source, g, d, compute_chi=compute_chi, corrupt=corrupt
            )
            summary.records.append(record)
            if record.outcome == "precondition":
                summary.skipped += 1
            elif record.ok:
                summary.passed += 1
            else:
                summary.failed += 1
                if record.graph6 and record.graph6 not in summary.counterexamples:
                    summary.counterexamples.append(record.graph6)
    return summary


def run_base_case_suite(
    count: int = 1_000,
    seed: int = DEFAULT_SEED,
    max_n: int = 20,
    *,
    progress: Callable[[int, int], None] | None = None,
) -> SuiteSummary:
    """Sweep triangle-free subcubic graphs through the d = 3 base case."""
    summary = SuiteSummary("base-case", [])
    for i, (source, g) in enumerate(base_case_corpus(count, seed, max_n)):
        if progress is not None:
            progress(i, count)
        record = run_one(i, source, g, 3, compute_chi=False)
        summary.records.append(record)
        if record.outcome == "precondition":
            summary.skipped += 1
            continue
        if record.ok and record.augmentations <= record.initial_odd_cycles:
            summary.passed += 1
        else:
            summary.failed += 1
            if record.message is None:
                record.message = (
                    f"{record.augmentations} swaps exceed"
                    f" {record.initial_odd_cycles} initial odd cycles"
                )
            if record.graph6 is None:
                record.graph6 = encode_graph6(g)
            if record.graph6 not in summary.counterexamples:
                summary.counterexamples.append(record.graph6)
    return summary
