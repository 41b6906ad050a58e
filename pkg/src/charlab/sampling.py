"""Batch Monte-Carlo drivers for the growth process.

Draw i of a batch always uses the uniform stream (master_seed, i), so
results are independent of chunking, worker count, and scheduling.  The
per-step corner probabilities are evaluated in float64 by the same
cancelled product as the exact kernel; the hot loop is jit-compiled when
numba is available and runs as plain Python otherwise.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a normal install
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


@njit(cache=True, nogil=True)
def _grow_core(n, af, u, rows, cols, boxes):
    """Grow a diagram by n boxes; fills ``boxes`` with 1-indexed (row, col).

    rows/cols are scratch arrays of length >= n holding row lengths and
    column heights; they must be zeroed by the caller.
    """
    nrows = 0
    for step in range(n):
        t = u[step]
        acc = 0.0
        pick_r = -1
        pick_c = -1
        last_r = -1
        last_c = -1
        for r in range(nrows + 1):
            if r < nrows:
                rlen = rows[r]
                if r > 0 and rlen == rows[r - 1]:
                    continue  # row above has equal length: corner not addable
            else:
                rlen = 0
            p = 1.0
            for i in range(r):  # boxes above in column rlen+1
                base = af * (rows[i] - rlen - 1) + (r - 1 - i)
                p *= (base + af) / (base + af + 1.0)
            for j in range(rlen):  # boxes left in row r+1
                base = af * (rlen - 1 - j) + (cols[j] - r - 1)
                p *= (base + 1.0) / (base + af + 1.0)
            acc += p
            last_r = r
            last_c = rlen
            if t < acc:
                pick_r = r
                pick_c = rlen
                break
        if pick_r < 0:  # cumulative rounding left t unmatched: take the last corner
            pick_r = last_r
            pick_c = last_c
        rows[pick_r] += 1
        if pick_r == nrows:
            nrows += 1
        cols[pick_c] += 1
        boxes[step, 0] = pick_r + 1
        boxes[step, 1] = pick_c + 1
    return nrows


def grow_boxes(n: int, alpha_float: float, uniforms: np.ndarray) -> np.ndarray:
    """One growth path as an (n, 2) int64 array of added boxes."""
    rows = np.zeros(n, np.int64)
    cols = np.zeros(n, np.int64)
    boxes = np.empty((n, 2), np.int64)
    _grow_core(n, alpha_float, uniforms, rows, cols, boxes)
    return boxes


@dataclass(frozen=True)
class BatchResult:
    """Per-draw integer sums of box coordinates plus the derived t floats.

    The exact numerator of draw i is alpha*(col_sum[i] - n) - (row_sum[i] - n);
    t_values holds its float image divided by sqrt(alpha * C(n,2)).
    """

    n: int
    alpha: Fraction
    master_seed: int
    row_sums: np.ndarray
    col_sums: np.ndarray
    t_values: np.ndarray

    def s_exact(self, i: int) -> Fraction:
        return self.alpha * (int(self.col_sums[i]) - self.n) - (
            int(self.row_sums[i]) - self.n
        )


def _run_range(n, af, master_seed, lo, hi, row_sums, col_sums):
    rows = np.zeros(n, np.int64)
    cols = np.zeros(n, np.int64)
    boxes = np.empty((n, 2), np.int64)
    for i in range(lo, hi):
        u = np.random.default_rng((master_seed, i)).random(n)
        rows[:] = 0
        cols[:] = 0
        _grow_core(n, af, u, rows, cols, boxes)
        row_sums[i] = boxes[:, 0].sum()
        col_sums[i] = boxes[:, 1].sum()


def sample_batch(
    n: int, alpha: Fraction, master_seed: int, count: int, threads: int = 1
) -> BatchResult:
    """Draw ``count`` paths on substreams 0..count-1 and collect coordinate sums."""
    if n < 1 or count < 1:
        raise ValueError("n and count must be positive")
    alpha = Fraction(alpha)
    af = float(alpha)
    row_sums = np.empty(count, np.int64)
    col_sums = np.empty(count, np.int64)
    if threads > 1:
        chunk = max(1024, count // (threads * 8) + 1)
        spans = [(lo, min(lo + chunk, count)) for lo in range(0, count, chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futs = [
                pool.submit(_run_range, n, af, master_seed, lo, hi, row_sums, col_sums)
                for lo, hi in spans
            ]
            for f in futs:
                f.result()
    else:
        _run_range(n, af, master_seed, 0, count, row_sums, col_sums)
    scale = math.sqrt(af * (n * (n - 1) // 2)) if n >= 2 else float("nan")
    t = (af * (col_sums - n) - (row_sums - n)) / scale
    return BatchResult(n, alpha, master_seed, row_sums, col_sums, t)


def sample_shape_counts(
    n: int, alpha: Fraction, master_seed: int, count: int
) -> dict[tuple[int, ...], int]:
    """Empirical final-shape counts over ``count`` draws (for distribution tests)."""
    af = float(alpha)
    rows = np.zeros(n, np.int64)
    cols = np.zeros(n, np.int64)
    boxes = np.empty((n, 2), np.int64)
    counts: dict[tuple[int, ...], int] = {}
    for i in range(count):
        u = np.random.default_rng((master_seed, i)).random(n)
        rows[:] = 0
        cols[:] = 0
        nrows = _grow_core(n, af, u, rows, cols, boxes)
        shape = tuple(int(v) for v in rows[:nrows])
        counts[shape] = counts.get(shape, 0) + 1
    return counts


@dataclass(frozen=True)
class IncrementScan:
    """Increment statistics of a batch at alpha = 1 (integer contents)."""

    n: int
    master_seed: int
    count: int
    max_abs_final: int
    final_exceed_count: int  # draws with |X_n| above the fixed threshold
    threshold: float
    step_bound_violations: int  # steps with |X_j| > j anywhere in the batch
    max_abs_over_step: int  # max over j of |X_j| - (j-1); <= 0 means the tight bound held


def concentration_scan(
    n: int, master_seed: int, count: int, threshold: float
) -> IncrementScan:
    """Scan ``count`` undeformed paths for large final increments and bound breaches."""
    rows = np.zeros(n, np.int64)
    cols = np.zeros(n, np.int64)
    boxes = np.empty((n, 2), np.int64)
    steps = np.arange(1, n + 1)
    max_abs_final = 0
    exceed = 0
    violations = 0
    max_excess = -(10**9)
    for i in range(count):
        u = np.random.default_rng((master_seed, i)).random(n)
        rows[:] = 0
        cols[:] = 0
        _grow_core(n, 1.0, u, rows, cols, boxes)
        x = boxes[:, 1] - boxes[:, 0]  # contents of the added boxes
        ax = np.abs(x)
        last = int(ax[-1])
        if last > max_abs_final:
            max_abs_final = last
        if last > threshold:
            exceed += 1
        violations += int(np.count_nonzero(ax > steps))
        excess = int(np.max(ax - steps + 1))
        if excess > max_excess:
            max_excess = excess
    return IncrementScan(
        n, master_seed, count, max_abs_final, exceed, threshold, violations, max_excess
    )
