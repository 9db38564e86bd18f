"""Per-element timing of the incremental construction step."""

from __future__ import annotations

import gc
import os
import time
from dataclasses import dataclass
from typing import List

from .lattice import grow, lb0

__all__ = ["MIN_TIMED_WEIGHT", "BenchRow", "benchmark", "spread"]

# steps out of L_B(0) and L_B(1) add one or two items; they only warm up
MIN_TIMED_WEIGHT = 2


@dataclass
class BenchRow:
    n: int
    added_nodes: int
    added_edges: int
    seconds: float

    @property
    def per_item(self) -> float:
        return self.seconds / (self.added_nodes + self.added_edges)


def _pin_one_cpu():
    if hasattr(os, "sched_getaffinity"):
        cpus = sorted(os.sched_getaffinity(0))
        if cpus:
            os.sched_setaffinity(0, {cpus[0]})


def benchmark(start: int, stop: int) -> List[BenchRow]:
    """Time the step L_B(n) -> L_B(n+1) for n in [start, stop).

    Steps below ``MIN_TIMED_WEIGHT`` and everything before ``start`` run
    untimed.  The cyclic collector is paused inside each timed step.
    """
    if not 0 <= start < stop:
        raise ValueError("need 0 <= start < stop")
    first = max(start, MIN_TIMED_WEIGHT)
    if first >= stop:
        raise ValueError(f"nothing to time in [{start}, {stop}) (steps below n={MIN_TIMED_WEIGHT} are warm-up)")
    _pin_one_cpu()
    d = lb0()
    for _ in range(first):
        grow(d)
    rows = []
    was_enabled = gc.isenabled()
    try:
        for n in range(first, stop):
            gc.collect()
            gc.disable()
            t0 = time.perf_counter()
            stats = grow(d)
            dt = time.perf_counter() - t0
            gc.enable()
            rows.append(BenchRow(n, stats.added_nodes, stats.added_edges, dt))
    finally:
        if was_enabled:
            gc.enable()
        else:
            gc.disable()
    return rows


def spread(rows: List[BenchRow]) -> float:
    """max / min time per added item."""
    per = [r.per_item for r in rows]
    return max(per) / min(per)
