"""Timing harness: tableaux formula against h-polynomial formula.

Both methods are called as black boxes on a fresh Eulerian cache per
repetition, so the h-polynomial timings include their memoisation cost.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import sigma
from .errors import limits
from .oracle import count_members, sigma_oracle
from .poset import DenseTensor, check_shape
from .report import digest

CSV_COLUMNS = ("n", "s", "method", "median_ns", "result_digest")

# two grids: growing s at fixed n, and growing n_i at fixed s and d = 4
DEFAULT_GRID: tuple[tuple[tuple[int, ...], int], ...] = (
    ((2, 2), 10),
    ((2, 2), 100),
    ((2, 2), 1000),
    ((2, 2, 2, 2), 2),
    ((4, 4, 4, 4), 2),
    ((8, 8, 8, 8), 2),
)


@dataclass
class BenchRow:
    n: tuple[int, ...]
    s: int
    method: str
    median_ns: int
    result_digest: str

    def cells(self) -> list[str]:
        return ["x".join(map(str, self.n)), str(self.s), self.method, str(self.median_ns), self.result_digest]


class DigestMismatch(Exception):
    def __init__(self, n, s, digests: dict[str, str]):
        super().__init__(f"methods disagree for n={n}, s={s}: {digests}")
        self.n, self.s, self.digests = n, s, digests


def parse_grid(text: str) -> list[tuple[tuple[int, ...], int]]:
    """``"2,2:10,100;3,3,3:2"`` -> [((2,2),10), ((2,2),100), ((3,3,3),2)]."""
    cells = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        shape_part, _, s_part = chunk.partition(":")
        if not s_part:
            raise ValueError(f"grid cell {chunk!r} needs the form n1,n2,...:s1,s2,...")
        n = check_shape(int(v) for v in shape_part.split(","))
        for s in s_part.split(","):
            cells.append((n, int(s)))
    return cells


def _methods(include_oracle: bool) -> dict[str, Callable[[tuple[int, ...], int], DenseTensor]]:
    methods = {"tableaux": sigma.sigma_tableaux, "hpoly": _hpoly_cold}
    if include_oracle:
        methods["oracle"] = sigma_oracle
    return methods


def _hpoly_cold(n, s):
    sigma.clear_cache()
    return sigma.sigma_hpoly(n, s)


def time_call(fn: Callable[[], DenseTensor], warmup: int, repeat: int) -> tuple[int, DenseTensor]:
    for _ in range(warmup):
        fn()
    samples = []
    result = None
    for _ in range(max(repeat, 1)):
        t0 = time.perf_counter_ns()
        result = fn()
        samples.append(time.perf_counter_ns() - t0)
    return int(statistics.median(samples)), result


def run_bench(grid: Iterable[tuple[Sequence[int], int]], warmup: int = 1, repeat: int = 5,
              include_oracle: bool = False) -> list[BenchRow]:
    rows = []
    guard = limits().max_enum
    for n, s in grid:
        n = check_shape(n)
        digests = {}
        for name, fn in _methods(include_oracle).items():
            if name == "oracle" and count_members(n, s) > guard:
                continue
            median, result = time_call(lambda: fn(n, s), warmup, repeat)
            digests[name] = digest(result)
            rows.append(BenchRow(n, s, name, median, digests[name]))
        if len(set(digests.values())) > 1:
            raise DigestMismatch(n, s, digests)
    return rows
