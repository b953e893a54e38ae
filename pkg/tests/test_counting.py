import random

import pytest

from conftest import random_row_convex
from latticerect import (Axis, CellRegion, CrossingClass, Dihedral,
                         LatticeRect, aztec, aztec_half, biscuit, biscuit_half,
                         build, classify, count_breakdown, count_family,
                         count_fast, count_naive, rectangles, staircase,
                         staircase_rects, transform)
from latticerect.counting import _sweep_rows

# frozen by independent hand/brute-force enumeration
FROZEN_COUNTS = {
    aztec: [9, 51, 166, 410, 855, 1589, 2716, 4356],
    biscuit: [1, 11, 54, 170, 415, 861, 1596, 2724],
    staircase: [1, 5, 15, 35, 70, 126, 210, 330],
    aztec_half: [3, 16, 50, 120, 245, 448, 756, 1200],
    biscuit_half: [1, 8, 30, 80, 175, 336, 588, 960],
}

EMPTY = CellRegion(0, ())


def test_count_naive_examples():
    assert count_naive(CellRegion(0, ((0, 1),))) == 1
    assert count_naive(build(aztec(1))) == 9
    assert count_naive(build(staircase(2))) == 5
    assert count_naive(build(biscuit_half(1))) == 1
    assert count_naive(EMPTY) == 0


def test_count_fast_examples():
    assert count_fast(build(aztec(1))) == 9
    assert count_fast(build(aztec(2))) == 51
    assert count_fast(EMPTY) == 0


@pytest.mark.parametrize("make", list(FROZEN_COUNTS))
def test_frozen_counts_all_methods(make):
    for n, expected in enumerate(FROZEN_COUNTS[make], start=1):
        region = build(make(n))
        assert count_naive(region) == expected
        assert count_fast(region) == expected
        assert count_family(make(n), "formula") == expected


@pytest.mark.parametrize("make", list(FROZEN_COUNTS))
def test_fast_equals_naive_on_families(make):
    for n in range(1, 13):
        region = build(make(n))
        assert count_fast(region) == count_naive(region)


def test_fast_equals_naive_on_random_regions():
    rng = random.Random(1234)
    for _ in range(250):
        region = random_row_convex(rng)
        assert count_fast(region) == count_naive(region)


def test_pure_python_sweep_matches_naive():
    # the un-jitted fallback path, exact at any size
    for spec in [aztec(6), biscuit(5), staircase(7)]:
        region = build(spec)
        box = region.bounding_box()
        los = [lo - box.a for _, lo, _ in region.rows()]
        his = [hi - box.a for _, _, hi in region.rows()]
        assert _sweep_rows(los, his, box.width) == count_naive(region)


def test_count_invariant_under_all_symmetries():
    for make in FROZEN_COUNTS:
        for n in range(1, 11):
            region = build(make(n))
            base = count_fast(region)
            for g in Dihedral:
                assert count_fast(transform(region, g)) == base


def test_rectangles_enumeration_matches_count():
    for spec in [aztec(3), biscuit_half(4), staircase(5)]:
        region = build(spec)
        rects = list(rectangles(region))
        assert len(rects) == count_naive(region)
        assert len(set(rects)) == len(rects)
        assert all(region.contains_rect(r) for r in rects)


def test_rectangles_on_empty_region():
    assert list(rectangles(EMPTY)) == []


# --- crossing classification ------------------------------------------------

def test_classify_examples():
    delta = Axis(0)
    assert classify(LatticeRect(-3, 2, 1, 3), delta) is CrossingClass.LEFT
    assert classify(LatticeRect(-2, 2, 0, 1), delta) is CrossingClass.CENTERED
    assert classify(LatticeRect(1, 3, 0, 2), delta) is CrossingClass.NON_CROSSING
    # touching the axis with an edge is not crossing
    assert classify(LatticeRect(0, 2, 0, 1), delta) is CrossingClass.NON_CROSSING
    assert classify(LatticeRect(-2, 0, 0, 1), delta) is CrossingClass.NON_CROSSING


def test_classify_half_unit_axis():
    delta = Axis(0, half=True)  # x = 1/2
    assert classify(LatticeRect(0, 1, 0, 1), delta) is CrossingClass.CENTERED
    assert classify(LatticeRect(-1, 3, 0, 1), delta) is CrossingClass.RIGHT
    assert classify(LatticeRect(-3, 2, 0, 1), delta) is CrossingClass.LEFT
    assert classify(LatticeRect(1, 3, 0, 1), delta) is CrossingClass.NON_CROSSING
    # centered exactly when a + b = 2*x0 + 1
    assert classify(LatticeRect(-2, 3, 0, 1), delta) is CrossingClass.CENTERED


# --- breakdowns --------------------------------------------------------------

def test_breakdown_half_diamond_order_2():
    breakdown = count_breakdown(build(aztec_half(2)), Axis(0))
    assert breakdown.by_class[CrossingClass.LEFT] == 1
    assert breakdown.by_class[CrossingClass.RIGHT] == 1
    assert breakdown.by_class[CrossingClass.CENTERED] == 4
    assert breakdown.by_class[CrossingClass.NON_CROSSING] == 10
    assert breakdown.total == 16
    assert breakdown.crossing == 6


def test_breakdown_axis_outside_box():
    breakdown = count_breakdown(build(staircase(3)), Axis(-5))
    assert breakdown.by_class[CrossingClass.NON_CROSSING] == breakdown.total == 15


def test_breakdown_biscuit_half_crossing():
    breakdown = count_breakdown(build(biscuit_half(2)), Axis(0, half=True))
    assert breakdown.crossing == 6
    assert breakdown.by_class[CrossingClass.NON_CROSSING] == 2


@pytest.mark.parametrize("n", range(2, 7))
def test_breakdown_identities_small(n):
    s = staircase_rects
    half = count_breakdown(build(aztec_half(n)), Axis(0))
    assert half.by_class[CrossingClass.LEFT] == s(n - 1)
    assert half.by_class[CrossingClass.RIGHT] == s(n - 1)
    assert half.by_class[CrossingClass.CENTERED] == s(n) - s(n - 1)
    assert half.by_class[CrossingClass.NON_CROSSING] == 2 * s(n)

    bhalf = count_breakdown(build(biscuit_half(n)), Axis(0, half=True))
    assert bhalf.crossing == s(n) + s(n - 1)
    assert bhalf.by_class[CrossingClass.NON_CROSSING] == 2 * s(n - 1)


def test_breakdown_total_matches_naive():
    for spec, axis in [(aztec(3), Axis(0)), (biscuit(3), Axis(0, half=True)),
                       (staircase(4), Axis(1))]:
        region = build(spec)
        breakdown = count_breakdown(region, axis)
        assert breakdown.total == count_naive(region)
        assert sum(breakdown.by_class.values()) == breakdown.total


# --- per-family dispatch ------------------------------------------------------

def test_count_family_methods_agree_on_spot_specs():
    from latticerect import Part
    for spec in [aztec(1), biscuit(1), aztec_half(1), biscuit_half(2),
                 staircase(4), biscuit_half(3, Part.SMALLER)]:
        values = {count_family(spec, m) for m in ("naive", "fast", "formula")}
        assert len(values) == 1


def test_count_family_smaller_half_uses_previous_order():
    from latticerect import Part, biscuit_half_rects
    for n in range(1, 8):
        spec = biscuit_half(n, Part.SMALLER)
        assert count_family(spec, "formula") == biscuit_half_rects(n - 1)
        assert count_family(spec, "naive") == count_family(spec, "formula")


def test_count_family_staircase_orientation_irrelevant():
    from latticerect import Corner
    for corner in Corner:
        assert count_family(staircase(3, corner), "fast") == 15


def test_count_family_unknown_method():
    with pytest.raises(ValueError):
        count_family(aztec(1), "guess")


def test_count_fast_matches_formula_at_larger_orders():
    from latticerect import aztec_rects, biscuit_rects
    assert count_fast(build(aztec(64))) == aztec_rects(64)
    assert count_fast(build(biscuit(64))) == biscuit_rects(64)
