"""Wall-clock scaling of the exact solver across instance sizes.

One instance per n (the dynamic program's runtime does not depend on the
distances, so instance variety adds nothing), solved ``reps`` times with
the median time kept.  Solves run strictly sequentially so consecutive-n
time ratios are comparable; under 2^n growth each extra city should
roughly double the time.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .errors import DomainError, InsufficientDataError, SizeError
from .heldkarp import DEFAULT_SIZE_CAP, solve
from .instance import generate_random


@dataclass(frozen=True)
class ScalingRecord:
    n: int
    states: int
    time_ns: int
    optimum: int


@dataclass(frozen=True)
class ScalingReport:
    records: tuple[ScalingRecord, ...]
    seed: int
    max_dist: int
    reps: int

    def __post_init__(self):
        ns = [r.n for r in self.records]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise DomainError(f"records must have strictly increasing n, got {ns}")
        object.__setattr__(self, "records", tuple(self.records))


def run_scaling(
    n_min: int,
    n_max: int,
    seed: int = 42,
    max_dist: int = 100,
    reps: int = 3,
) -> ScalingReport:
    """Benchmark solve over n_min..n_max inclusive.

    The instance for each n is generate_random(n, max_dist, seed + n).
    Timing covers the solve call only, never generation or output.
    """
    if n_min < 2 or n_min > n_max:
        raise DomainError(f"need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    if n_max > DEFAULT_SIZE_CAP:
        raise SizeError(f"n_max={n_max} exceeds the size cap {DEFAULT_SIZE_CAP}")
    if reps < 1:
        raise DomainError(f"reps must be >= 1, got {reps}")

    # Untimed warm-up so one-time solver setup never lands in a record.
    solve(generate_random(3, max_dist, seed))

    records = []
    for n in range(n_min, n_max + 1):
        inst = generate_random(n, max_dist, seed + n)
        times = []
        sol = None
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            sol = solve(inst)
            times.append(time.perf_counter_ns() - t0)
        records.append(
            ScalingRecord(
                n=n,
                states=sol.states_computed,
                time_ns=max(1, int(statistics.median(times))),
                optimum=sol.length,
            )
        )
    return ScalingReport(records=tuple(records), seed=seed, max_dist=max_dist, reps=reps)


def doubling_ratios(report: ScalingReport) -> list[tuple[int, float]]:
    """Per-increment time ratios over consecutive-n record pairs.

    Returns (n, time(n) / time(n - 1)) for every adjacent pair of records
    whose sizes differ by exactly one; raises InsufficientDataError when
    no such pair exists.
    """
    out = []
    for prev, cur in zip(report.records, report.records[1:]):
        if cur.n == prev.n + 1:
            out.append((cur.n, cur.time_ns / prev.time_ns))
    if not out:
        raise InsufficientDataError("need at least 2 records with consecutive n")
    return out


def emit_csv(report: ScalingReport) -> str:
    """CSV rendering: header plus one plain-decimal row per record."""
    lines = ["n,states,time_ns,optimum"]
    lines.extend(
        f"{r.n},{r.states},{r.time_ns},{r.optimum}" for r in report.records
    )
    return "\n".join(lines) + "\n"
