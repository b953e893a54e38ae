"""Invertible maps behind the counting identities, with exhaustive verifiers.

Each map is a concrete coordinate transformation between two finite rectangle
families, paired with its inverse.  ``verify_bijection`` enumerates a map's
whole domain and codomain at a given order and checks injectivity,
surjectivity, and the roundtrip, so the identities the closed forms rest on
can be replayed mechanically.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from .counting import CrossingClass, classify, rectangles
from .geometry import (Axis, CellRegion, LatticeRect, aztec_half, biscuit_half,
                       build, staircase)

#: Exhaustive verification is guarded to small orders; domain sizes grow as n^4.
MAX_VERIFY_ORDER = 20


@dataclass(frozen=True)
class Quadruple:
    """Strictly increasing integer quadruple 0 <= a < b < c < d."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if not (0 <= self.a < self.b < self.c < self.d):
            raise ValueError(f"not strictly increasing from 0: {self}")

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c},{self.d})"


def staircase_to_quadruple(rect: LatticeRect, n: int) -> Quadruple:
    """Encode a rectangle of the canonical order-n dl staircase as a quadruple.

    The staircase is flipped onto the frame where it sits above the line
    y = x + 1 with rows 2..n+1 (y -> n+2-y); there a contained rectangle
    [a, b] x [c, d] satisfies exactly 0 <= a < b < c < d <= n+2, so its own
    coordinates are the encoding.
    """
    if not build(staircase(n)).contains_rect(rect):
        raise ValueError(f"{rect} is not inside the order-{n} dl staircase")
    return Quadruple(rect.a, rect.b, n + 2 - rect.d, n + 2 - rect.c)


def quadruple_to_staircase(q: Quadruple, n: int) -> LatticeRect:
    """Inverse of staircase_to_quadruple; requires d <= n + 2."""
    if q.d > n + 2:
        raise ValueError(f"{q} exceeds the order-{n} bound {n + 2}")
    return LatticeRect(q.a, q.b, n + 2 - q.d, n + 2 - q.c)


def _require(rect: LatticeRect, region: CellRegion, what: str) -> None:
    if not region.contains_rect(rect):
        raise ValueError(f"{rect} is not inside {what}")


def fold_left_heavy(rect: LatticeRect, n: int) -> LatticeRect:
    """Map a left-heavy crossing rectangle of the top half diamond inward.

    Reflecting the rectangle's left part across the axis x = 0 and removing
    the right part leaves the strip [b, -a] x [c, d], which lands in the
    order-(n-1) staircase one column right of the axis.
    """
    _require(rect, build(aztec_half(n)), f"aztec-half:{n}")
    if classify(rect, Axis(0)) is not CrossingClass.LEFT:
        raise ValueError(f"{rect} is not left-heavy about x=0")
    return LatticeRect(rect.b, -rect.a, rect.c, rect.d)


def unfold_left_heavy(rect: LatticeRect, n: int) -> LatticeRect:
    """Inverse of fold_left_heavy: [u, v] x [c, d] back to [-v, u] x [c, d]."""
    if rect.a < 1:
        raise ValueError(f"{rect} does not lie strictly right of the axis")
    _require(rect, build(aztec_half(n)), f"aztec-half:{n}")
    return LatticeRect(-rect.b, rect.a, rect.c, rect.d)


def anchor_centered(rect: LatticeRect) -> LatticeRect:
    """Identify a centered rectangle [-b, b] x [c, d] with its right part."""
    if rect.a != -rect.b:
        raise ValueError(f"{rect} is not centered on the axis x=0")
    return LatticeRect(0, rect.b, rect.c, rect.d)


def unanchor_centered(rect: LatticeRect) -> LatticeRect:
    """Mirror an axis-anchored rectangle back to its centered original."""
    if rect.a != 0:
        raise ValueError(f"{rect} does not have its left side on the axis x=0")
    return LatticeRect(-rect.b, rect.b, rect.c, rect.d)


def expand_to_aztec_half(rect: LatticeRect, n: int) -> LatticeRect:
    """Widen a crossing rectangle of the larger biscuit half by one column.

    Inserting a full-height column just left of the half-unit axis turns the
    larger half of an order-n biscuit into the top half of an order-n Aztec
    diamond; a rectangle whose interior meets the axis grows with it, to
    [a-1, b] x [c, d], which crosses the new diamond's axis x = 0.
    """
    _require(rect, build(biscuit_half(n)), f"biscuit-half:{n}")
    if classify(rect, Axis(0, half=True)) is CrossingClass.NON_CROSSING:
        raise ValueError(f"{rect} does not cross the axis x=1/2")
    return LatticeRect(rect.a - 1, rect.b, rect.c, rect.d)


def shrink_to_biscuit_half(rect: LatticeRect, n: int) -> LatticeRect:
    """Inverse of expand_to_aztec_half: drop the inserted column."""
    _require(rect, build(aztec_half(n)), f"aztec-half:{n}")
    if classify(rect, Axis(0)) is CrossingClass.NON_CROSSING:
        raise ValueError(f"{rect} does not cross the axis x=0")
    return LatticeRect(rect.a + 1, rect.b, rect.c, rect.d)


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of exhaustively verifying one map at one order."""

    name: str
    order: int
    domain_size: int
    image_size: int
    is_injective: bool
    is_surjective: bool
    roundtrip_ok: bool
    counterexample: Optional[tuple] = None

    @property
    def verified(self) -> bool:
        return self.is_injective and self.is_surjective and self.roundtrip_ok


def _crossing_rects(region: CellRegion, axis: Axis,
                    wanted: Optional[CrossingClass] = None) -> list[LatticeRect]:
    out = []
    for rect in rectangles(region):
        cls = classify(rect, axis)
        if wanted is None:
            if cls is not CrossingClass.NON_CROSSING:
                out.append(rect)
        elif cls is wanted:
            out.append(rect)
    return out


def _quadruple_sides(n: int):
    domain = list(rectangles(build(staircase(n))))
    codomain = {Quadruple(*combo) for combo in itertools.combinations(range(n + 3), 4)}
    return domain, codomain, staircase_to_quadruple, quadruple_to_staircase


def _type_l_sides(n: int):
    domain = _crossing_rects(build(aztec_half(n)), Axis(0), CrossingClass.LEFT)
    inner = build(staircase(n - 1)).translate(1, 0)
    codomain = set(rectangles(inner))
    return domain, codomain, fold_left_heavy, unfold_left_heavy


def _type_c_sides(n: int):
    domain = _crossing_rects(build(aztec_half(n)), Axis(0), CrossingClass.CENTERED)
    codomain = {r for r in rectangles(build(staircase(n))) if r.a == 0}
    return (domain, codomain,
            lambda rect, _n: anchor_centered(rect),
            lambda rect, _n: unanchor_centered(rect))


def _biscuit_expand_sides(n: int):
    domain = _crossing_rects(build(biscuit_half(n)), Axis(0, half=True))
    codomain = set(_crossing_rects(build(aztec_half(n)), Axis(0)))
    return domain, codomain, expand_to_aztec_half, shrink_to_biscuit_half


_MAPS: dict[str, Callable] = {
    "quadruple": _quadruple_sides,
    "type_l": _type_l_sides,
    "type_c": _type_c_sides,
    "biscuit_expand": _biscuit_expand_sides,
}

BIJECTION_NAMES = tuple(_MAPS)


def verify_bijection(name: str, n: int) -> BijectionReport:
    """Exhaustively check one named map at order n (guarded to n <= 20).

    Any failure is reported with a concrete counterexample: the offending
    domain element plus its image, or its broken roundtrip.
    """
    if name not in _MAPS:
        raise ValueError(f"unknown bijection {name!r}; known: {', '.join(_MAPS)}")
    if not 1 <= n <= MAX_VERIFY_ORDER:
        raise ValueError(f"order must be in 1..{MAX_VERIFY_ORDER}, got {n}")
    domain, codomain, forward, inverse = _MAPS[name](n)
    images = set()
    counterexample = None
    in_codomain = True
    roundtrip_ok = True
    for x in domain:
        try:
            y = forward(x, n)
        except ValueError as err:
            in_codomain = roundtrip_ok = False
            counterexample = counterexample or (x, str(err))
            continue
        images.add(y)
        if y not in codomain:
            in_codomain = False
            counterexample = counterexample or (x, y)
            continue
        back = inverse(y, n)
        if back != x:
            roundtrip_ok = False
            counterexample = counterexample or (x, y, back)
    is_injective = in_codomain and len(images) == len(domain)
    is_surjective = in_codomain and images == codomain
    if not (is_injective and is_surjective) and counterexample is None:
        missed = codomain - images
        counterexample = (next(iter(missed)),) if missed else None
    return BijectionReport(
        name=name,
        order=n,
        domain_size=len(domain),
        image_size=len(images),
        is_injective=is_injective,
        is_surjective=is_surjective,
        roundtrip_ok=roundtrip_ok,
        counterexample=counterexample,
    )
