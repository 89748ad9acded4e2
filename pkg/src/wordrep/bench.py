"""Timing the Fenwick check against the quadratic scanning baseline on (w_n, C_n)."""

from __future__ import annotations

import csv
import gc
import math
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, TextIO

from .cycles import gen_cycle_word
from .graph import Graph, cycle_graph
from .graphcheck import CheckResult, graph_check, graph_check_scan
from .words import Word

CSV_COLUMNS = ("n", "word_length", "t_fenwick_ns", "t_naive_ns", "edgecount")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    word_length: int
    t_fenwick: float
    t_naive: float
    edgecount: int

    def row(self) -> tuple[int, int, int, int, int]:
        return (self.n, self.word_length, round(self.t_fenwick * 1e9), round(self.t_naive * 1e9), self.edgecount)


def time_call(
    fn: Callable[[Word, Graph], CheckResult], w: Word, g: Graph, repeats: int, warmup: bool = True
) -> tuple[float, CheckResult]:
    """Median wall time over ``repeats`` runs, by default after one untimed warm-up.

    The cyclic garbage collector is paused while timing, as ``timeit`` does.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    result = fn(w, g) if warmup else None
    samples = []
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for _ in range(repeats):
            t0 = time.perf_counter_ns()
            out = fn(w, g)
            samples.append(time.perf_counter_ns() - t0)
            if result is None:
                result = out
    finally:
        if enabled:
            gc.enable()
    return max(statistics.median(samples), 1) / 1e9, result


def bench_one(n: int, repeats: int = 5, naive_repeats: int | None = None, naive_warmup: bool = True) -> BenchRecord:
    """Time both checks on (w_n, C_n).

    The baseline has nothing to warm up, so at large n ``naive_warmup=False``
    saves one full quadratic run.
    """
    w = gen_cycle_word(n)
    g = cycle_graph(n)
    t_fast, fast = time_call(graph_check, w, g, repeats)
    nr = repeats if naive_repeats is None else naive_repeats
    t_slow, slow = time_call(graph_check_scan, w, g, nr, warmup=naive_warmup)
    if fast.edgecount != slow.edgecount or not (fast.matches and slow.matches):
        raise RuntimeError(f"checks disagree at n={n}: {fast} vs {slow}")
    return BenchRecord(n, len(w), t_fast, t_slow, fast.edgecount)


def run_bench(ns: Iterable[int], repeats: int = 5, naive_repeats: int | None = None) -> list[BenchRecord]:
    return [bench_one(n, repeats, naive_repeats) for n in ns]


def write_csv(records: Iterable[BenchRecord], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(r.row())


def fit_exponent(ns: list[int], ts: list[float]) -> float:
    """Least-squares slope of log t against log n."""
    xs = [math.log(n) for n in ns]
    ys = [math.log(t) for t in ts]
    mx, my = statistics.fmean(xs), statistics.fmean(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
