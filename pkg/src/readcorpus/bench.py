"""Backend benchmarking with a built-in correctness gate.

Timing a backend that returns different numbers is worse than useless, so
the benchmark first proves every requested backend reproduces the
sequential report on the full input and aborts if not. Only then does it
time each backend over a ladder of corpus prefixes.
"""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import dataclass

from .corpus import Corpus
from .executor import CorpusReport, PipelineConfig, run
from .reports import parse_json_report, render_json

__all__ = [
    "BenchRow",
    "EqualityViolation",
    "prefix_sizes",
    "comparable_view",
    "run_benchmark",
    "rows_to_csv",
    "rows_to_json",
]


class EqualityViolation(AssertionError):
    """A backend produced output differing from the sequential reference."""


@dataclass(frozen=True)
class BenchRow:
    backend: str
    size: int
    seconds: float  # median wall time over the repeats
    docs_per_second: float

    def to_record(self) -> dict:
        return {
            "backend": self.backend,
            "size": self.size,
            "seconds": self.seconds,
            "docs_per_second": self.docs_per_second,
        }


def prefix_sizes(n: int) -> list[int]:
    """1-2-5 ladder up to n, with n itself always last."""
    if n < 1:
        return []
    sizes = []
    step = 1
    while step <= n:
        for mult in (1, 2, 5):
            value = mult * step
            if value < n:
                sizes.append(value)
        step *= 10
    sizes.append(n)
    return sorted(set(sizes))


def _prefix(corpus: Corpus, size: int) -> Corpus:
    return Corpus(
        documents=corpus.documents[:size], root=corpus.root, failures=()
    )


def comparable_view(report: CorpusReport) -> dict:
    """Everything in the report that must not depend on the backend."""
    doc = parse_json_report(render_json(report))
    del doc["run_meta"]
    return doc


def _one_run(
    corpus: Corpus,
    cfg: PipelineConfig,
    backend: str,
    jobs: int | None,
    endpoints: list[str] | None,
) -> CorpusReport:
    return run(corpus, cfg, backend, jobs=jobs, endpoints=endpoints)


def run_benchmark(
    corpus: Corpus,
    cfg: PipelineConfig,
    backends: tuple[str, ...] = ("sequential", "parallel"),
    *,
    jobs: int | None = None,
    endpoints: list[str] | None = None,
    repeat: int = 3,
) -> list[BenchRow]:
    """Gate on output equality, then time each backend over the ladder."""
    if repeat < 1:
        raise ValueError(f"repeat must be >= 1, got {repeat}")
    reference = comparable_view(_one_run(corpus, cfg, "sequential", jobs, endpoints))
    for backend in backends:
        if backend == "sequential":
            continue
        view = comparable_view(_one_run(corpus, cfg, backend, jobs, endpoints))
        if view != reference:
            raise EqualityViolation(
                f"backend {backend!r} disagrees with sequential output; "
                "refusing to benchmark incorrect code"
            )

    rows = []
    for backend in backends:
        for size in prefix_sizes(len(corpus)):
            sub = _prefix(corpus, size)
            times = []
            for _ in range(repeat):
                started = time.perf_counter()
                _one_run(sub, cfg, backend, jobs, endpoints)
                times.append(time.perf_counter() - started)
            median = statistics.median(times)
            rows.append(
                BenchRow(
                    backend=backend,
                    size=size,
                    seconds=median,
                    docs_per_second=(size / median) if median > 0 else float("inf"),
                )
            )
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    lines = ["backend,size,seconds,docs_per_second"]
    for r in rows:
        lines.append(f"{r.backend},{r.size},{r.seconds:.6f},{r.docs_per_second:.2f}")
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[BenchRow]) -> str:
    return json.dumps([r.to_record() for r in rows], indent=2) + "\n"
