"""Exact lattice-rectangle counts inside a cell region, three independent ways.

``count_naive`` is the oracle: enumerate every candidate rectangle in the
bounding box and test fullness against a 2D prefix-sum table, O(W^2 H^2).
``count_fast`` sweeps rows bottom-up, maintaining per-column heights of
consecutive filled cells, and accumulates per row the rectangles whose bottom
edge lies on that row with a monotonic stack, O(cells + W*H).  Closed forms
live in :mod:`latticerect.formulas`; the three routes must always agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Iterator, Mapping

import numpy as np

from . import formulas
from .geometry import (Axis, CellRegion, Family, LatticeRect, Part, ShapeSpec,
                       build)


class CrossingClass(Enum):
    """Position of a rectangle relative to a vertical axis.

    A rectangle whose open interior meets the axis is LEFT, RIGHT, or CENTERED
    according to whether the part left of the axis is wider than, narrower
    than, or exactly as wide as the part right of it; anything else is
    NON_CROSSING.
    """

    LEFT = "L"
    RIGHT = "R"
    CENTERED = "C"
    NON_CROSSING = "non-crossing"


def classify(rect: LatticeRect, axis: Axis) -> CrossingClass:
    dx = axis.double_x  # widths compared in half-units, exact for both kinds
    if not (2 * rect.a < dx < 2 * rect.b):
        return CrossingClass.NON_CROSSING
    left = dx - 2 * rect.a
    right = 2 * rect.b - dx
    if left > right:
        return CrossingClass.LEFT
    if left < right:
        return CrossingClass.RIGHT
    return CrossingClass.CENTERED


def _prefix_table(region: CellRegion) -> tuple[list[list[int]], int, int]:
    """Cumulative cell counts: P[r][i] = cells in rows < r, columns < i (box-relative)."""
    box = region.bounding_box()
    width = box.b - box.a
    table = [[0] * (width + 1)]
    for _, lo, hi in region.rows():
        lo2, hi2 = lo - box.a, hi - box.a
        prev = table[-1]
        table.append([prev[i] + min(i, hi2) - min(i, lo2) for i in range(width + 1)])
    return table, box.a, box.c


def count_naive(region: CellRegion) -> int:
    """Oracle count: try every (a, b) x (c, d) in the bounding box."""
    if region.is_empty:
        return 0
    table, _, _ = _prefix_table(region)
    width = len(table[0]) - 1
    height = len(table) - 1
    total = 0
    for c in range(height):
        row_c = table[c]
        for d in range(c + 1, height + 1):
            row_d = table[d]
            nrows = d - c
            for a in range(width):
                da = row_d[a]
                ca = row_c[a]
                for b in range(a + 1, width + 1):
                    if row_d[b] - row_c[b] - da + ca == (b - a) * nrows:
                        total += 1
    return total


def rectangles(region: CellRegion) -> Iterator[LatticeRect]:
    """All rectangles contained in the region, oracle-grade enumeration."""
    if region.is_empty:
        return
    table, x0, y0 = _prefix_table(region)
    width = len(table[0]) - 1
    height = len(table) - 1
    for c in range(height):
        row_c = table[c]
        for d in range(c + 1, height + 1):
            row_d = table[d]
            nrows = d - c
            for a in range(width):
                for b in range(a + 1, width + 1):
                    if row_d[b] - row_c[b] - row_d[a] + row_c[a] == (b - a) * nrows:
                        yield LatticeRect(x0 + a, x0 + b, y0 + c, y0 + d)


def _sweep_rows(los, his, width: int) -> int:
    """Row sweep with per-column heights and a monotonic stack.

    ``rects[i]`` counts all-filled rectangles whose bottom edge is on the
    current row and whose right edge is at column i+1: with j the nearest
    column left of i of strictly smaller height, every (left edge, height)
    pair splits at j.  Works on plain lists (exact, unbounded ints); the same
    code is JIT-compiled over int64 arrays for large regions.
    """
    heights = [0] * width
    rects = [0] * width
    stack = [0] * width
    total = 0
    for r in range(len(los)):
        lo = los[r]
        hi = his[r]
        for i in range(width):
            if lo <= i < hi:
                heights[i] += 1
            else:
                heights[i] = 0
        top = -1
        for i in range(width):
            while top >= 0 and heights[stack[top]] >= heights[i]:
                top -= 1
            if top >= 0:
                j = stack[top]
                rects[i] = rects[j] + heights[i] * (i - j)
            else:
                rects[i] = heights[i] * (i + 1)
            top += 1
            stack[top] = i
            total += rects[i]
    return total


_jit_sweep = None


def _jit_kernel():
    global _jit_sweep
    if _jit_sweep is None:
        try:
            import numba
        except ImportError:
            _jit_sweep = False
        else:
            _jit_sweep = numba.njit(cache=True)(_sweep_rows)
    return _jit_sweep


def count_fast(region: CellRegion) -> int:
    """Same value as count_naive in O(cells + W*H); exact at any size."""
    if region.is_empty:
        return 0
    box = region.bounding_box()
    width = box.b - box.a
    height = region.height
    los = [lo - box.a for _, lo, _ in region.rows()]
    his = [hi - box.a for _, _, hi in region.rows()]
    # int64 kernel is safe while the count's trivial upper bound fits
    bound = (width * (width + 1) // 2) * (height * (height + 1) // 2)
    kernel = _jit_kernel() if bound < 2**62 else False
    if kernel:
        return int(kernel(np.asarray(los, dtype=np.int64),
                          np.asarray(his, dtype=np.int64), width))
    return _sweep_rows(los, his, width)


@dataclass(frozen=True)
class CountBreakdown:
    """Rectangle count split by crossing class relative to one axis."""

    total: int
    by_class: Mapping[CrossingClass, int]

    @property
    def crossing(self) -> int:
        return self.total - self.by_class[CrossingClass.NON_CROSSING]


def count_breakdown(region: CellRegion, axis: Axis) -> CountBreakdown:
    """Classify every contained rectangle against the axis (oracle-grade)."""
    tally = {cls: 0 for cls in CrossingClass}
    total = 0
    for rect in rectangles(region):
        tally[classify(rect, axis)] += 1
        total += 1
    return CountBreakdown(total, MappingProxyType(tally))


_FORMULA_FOR_FAMILY = {
    Family.STAIRCASE: formulas.SequenceId.STAIRCASE,
    Family.AZTEC_HALF: formulas.SequenceId.AZTEC_HALF,
    Family.BISCUIT_HALF: formulas.SequenceId.BISCUIT_HALF,
    Family.AZTEC: formulas.SequenceId.AZTEC,
    Family.BISCUIT: formulas.SequenceId.BISCUIT,
}

COUNT_METHODS = ("naive", "fast", "formula")


def count_family(spec: ShapeSpec, method: str = "fast") -> int:
    """Count a family shape by the chosen method; all methods agree.

    The formula route is order-based: variants of a family share one count,
    and the smaller biscuit half of order n matches the larger half of order
    n-1.
    """
    if method == "formula":
        n = spec.n
        if spec.family is Family.BISCUIT_HALF and spec.variant is Part.SMALLER:
            n -= 1
        return formulas.evaluate(_FORMULA_FOR_FAMILY[spec.family], n)
    if method == "naive":
        return count_naive(build(spec))
    if method == "fast":
        return count_fast(build(spec))
    raise ValueError(f"unknown method {method!r}; expected one of {COUNT_METHODS}")
