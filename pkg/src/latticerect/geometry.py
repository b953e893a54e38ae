"""Lattice shape construction: Aztec diamonds, square biscuits, staircases, halves.

Every shape is a finite union of unit lattice cells, stored as one contiguous
column interval per row (all shapes here are row-convex).  Cell (i, j) is the
unit square [i, i+1] x [j, j+1].  Canonical placements put the symmetry center
of an Aztec diamond, and the quasi-center of a biscuit (the lattice point just
below-left of its true center), at the origin.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Union


class ShapeError(ValueError):
    """Invalid shape parameters, malformed shape text, or an impossible region."""


@dataclass(frozen=True)
class LatticeRect:
    """Axis-aligned lattice rectangle [a, b] x [c, d] with a < b and c < d."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if not (self.a < self.b and self.c < self.d):
            raise ShapeError(f"degenerate rectangle [{self.a},{self.b}]x[{self.c},{self.d}]")

    @property
    def width(self) -> int:
        return self.b - self.a

    @property
    def height(self) -> int:
        return self.d - self.c

    def cells(self) -> Iterator[tuple[int, int]]:
        for j in range(self.c, self.d):
            for i in range(self.a, self.b):
                yield (i, j)

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]x[{self.c},{self.d}]"


@dataclass(frozen=True)
class Axis:
    """A vertical line used for splitting and for crossing classification.

    ``half=False`` puts the line on the lattice line x = x0; ``half=True`` puts
    it halfway between lattice lines, at x = x0 + 1/2 (the biscuit symmetry
    axis is of this kind).
    """

    x0: int
    half: bool = False

    @property
    def double_x(self) -> int:
        """Line position in half-units; exact for both kinds."""
        return 2 * self.x0 + (1 if self.half else 0)

    def __str__(self) -> str:
        return f"x={self.x0}.5" if self.half else f"x={self.x0}"


class Dihedral(Enum):
    """The eight symmetries of the square lattice fixing the origin.

    Values are row-major 2x2 matrices acting on points as
    (x, y) -> (a*x + b*y, c*x + d*y).  Rotations are counterclockwise.
    """

    IDENTITY = (1, 0, 0, 1)
    ROT90 = (0, -1, 1, 0)
    ROT180 = (-1, 0, 0, -1)
    ROT270 = (0, 1, -1, 0)
    FLIP_X = (-1, 0, 0, 1)  # reflect across the vertical axis x = 0
    FLIP_Y = (1, 0, 0, -1)  # reflect across the horizontal axis y = 0
    TRANSPOSE = (0, 1, 1, 0)  # reflect across y = x
    ANTITRANSPOSE = (0, -1, -1, 0)  # reflect across y = -x

    def apply_point(self, x: int, y: int) -> tuple[int, int]:
        a, b, c, d = self.value
        return (a * x + b * y, c * x + d * y)

    def apply_cell(self, i: int, j: int) -> tuple[int, int]:
        """Image of cell (i, j); the image of a unit cell is a unit cell."""
        x0, y0 = self.apply_point(i, j)
        x1, y1 = self.apply_point(i + 1, j + 1)
        return (min(x0, x1), min(y0, y1))


@dataclass(frozen=True)
class CellRegion:
    """A row-convex set of unit cells: one column interval [lo, hi) per row.

    ``row0`` is the lowest row index; ``spans[k]`` is the interval of row
    ``row0 + k``.  ``origin`` records where the construction placed the shape's
    center or quasi-center; it travels with translations but does not take part
    in equality.
    """

    row0: int
    spans: tuple[tuple[int, int], ...]
    origin: tuple[int, int] = field(default=(0, 0), compare=False)

    def __post_init__(self):
        if not self.spans and self.row0 != 0:
            object.__setattr__(self, "row0", 0)
        for k, (lo, hi) in enumerate(self.spans):
            if lo >= hi:
                raise ShapeError(f"empty interval [{lo},{hi}) in row {self.row0 + k}")

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]],
                   origin: tuple[int, int] = (0, 0)) -> "CellRegion":
        """Build a region from loose cells; rejects non-row-convex sets."""
        by_row: dict[int, set[int]] = {}
        for i, j in cells:
            by_row.setdefault(j, set()).add(i)
        if not by_row:
            return cls(0, (), origin)
        jmin, jmax = min(by_row), max(by_row)
        spans = []
        for j in range(jmin, jmax + 1):
            cols = by_row.get(j)
            if cols is None:
                raise ShapeError(f"row {j} is empty inside the row range")
            lo, hi = min(cols), max(cols) + 1
            if len(cols) != hi - lo:
                raise ShapeError(f"row {j} is not a contiguous interval")
            spans.append((lo, hi))
        return cls(jmin, tuple(spans), origin)

    @property
    def is_empty(self) -> bool:
        return not self.spans

    @property
    def height(self) -> int:
        return len(self.spans)

    @property
    def cell_count(self) -> int:
        return sum(hi - lo for lo, hi in self.spans)

    def rows(self) -> Iterator[tuple[int, int, int]]:
        """Yield (row index, lo, hi) from bottom to top."""
        for k, (lo, hi) in enumerate(self.spans):
            yield (self.row0 + k, lo, hi)

    def row_span(self, j: int) -> Optional[tuple[int, int]]:
        k = j - self.row0
        if 0 <= k < len(self.spans):
            return self.spans[k]
        return None

    def cells(self) -> Iterator[tuple[int, int]]:
        for j, lo, hi in self.rows():
            for i in range(lo, hi):
                yield (i, j)

    def __contains__(self, cell: tuple[int, int]) -> bool:
        span = self.row_span(cell[1])
        return span is not None and span[0] <= cell[0] < span[1]

    def bounding_box(self) -> LatticeRect:
        if self.is_empty:
            raise ShapeError("empty region has no bounding box")
        lo = min(s[0] for s in self.spans)
        hi = max(s[1] for s in self.spans)
        return LatticeRect(lo, hi, self.row0, self.row0 + len(self.spans))

    def contains_rect(self, rect: LatticeRect) -> bool:
        """True iff every cell of rect lies in the region."""
        for j in range(rect.c, rect.d):
            span = self.row_span(j)
            if span is None or rect.a < span[0] or rect.b > span[1]:
                return False
        return True

    def translate(self, dx: int, dy: int) -> "CellRegion":
        spans = tuple((lo + dx, hi + dx) for lo, hi in self.spans)
        origin = (self.origin[0] + dx, self.origin[1] + dy)
        return CellRegion(self.row0 + dy, spans, origin)


class Family(Enum):
    AZTEC = "aztec"
    BISCUIT = "biscuit"
    STAIRCASE = "staircase"
    AZTEC_HALF = "aztec-half"
    BISCUIT_HALF = "biscuit-half"


class Corner(Enum):
    """Staircase orientation: the corner where the right angle sits."""

    UL = "ul"
    UR = "ur"
    DL = "dl"
    DR = "dr"


class Side(Enum):
    TOP = "top"
    BOTTOM = "bottom"
    LEFT = "left"
    RIGHT = "right"


class Part(Enum):
    LARGER = "larger"
    SMALLER = "smaller"


Variant = Union[Corner, Side, Part]

_DEFAULT_VARIANT = {
    Family.STAIRCASE: Corner.DL,
    Family.AZTEC_HALF: Side.TOP,
    Family.BISCUIT_HALF: Part.LARGER,
}
_VARIANT_TYPE = {
    Family.STAIRCASE: Corner,
    Family.AZTEC_HALF: Side,
    Family.BISCUIT_HALF: Part,
}


@dataclass(frozen=True)
class ShapeSpec:
    """A shape family instance: family, order n, and a variant where one applies.

    Order must be >= 1, except that staircases admit order 0 (the empty
    region), which the four-staircase decomposition of a small biscuit needs.
    """

    family: Family
    n: int
    variant: Optional[Variant] = None

    def __post_init__(self):
        vtype = _VARIANT_TYPE.get(self.family)
        if vtype is None:
            if self.variant is not None:
                raise ShapeError(f"{self.family.value} takes no variant")
        elif self.variant is None:
            object.__setattr__(self, "variant", _DEFAULT_VARIANT[self.family])
        elif not isinstance(self.variant, vtype):
            raise ShapeError(
                f"{self.family.value} variant must be a {vtype.__name__}, "
                f"got {self.variant!r}")
        min_n = 0 if self.family is Family.STAIRCASE else 1
        if self.n < min_n:
            raise ShapeError(f"{self.family.value} order must be >= {min_n}, got {self.n}")

    def __str__(self) -> str:
        if self.variant is None:
            return f"{self.family.value}:{self.n}"
        return f"{self.family.value}:{self.n}:{self.variant.value}"


def aztec(n: int) -> ShapeSpec:
    return ShapeSpec(Family.AZTEC, n)


def biscuit(n: int) -> ShapeSpec:
    return ShapeSpec(Family.BISCUIT, n)


def staircase(n: int, corner: Corner = Corner.DL) -> ShapeSpec:
    return ShapeSpec(Family.STAIRCASE, n, corner)


def aztec_half(n: int, side: Side = Side.TOP) -> ShapeSpec:
    return ShapeSpec(Family.AZTEC_HALF, n, side)


def biscuit_half(n: int, part: Part = Part.LARGER) -> ShapeSpec:
    return ShapeSpec(Family.BISCUIT_HALF, n, part)


def parse_shape_spec(text: str) -> ShapeSpec:
    """Parse ``family:n[:variant]`` (case-insensitive); see format below.

    Grammar: ``aztec:<n>``, ``biscuit:<n>``, ``staircase:<n>[:ul|ur|dl|dr]``
    (default dl), ``aztec-half:<n>[:top|bottom|left|right]`` (default top),
    ``biscuit-half:<n>[:larger|smaller]`` (default larger).  Orders below 1 are
    rejected.  Errors carry the character position of the offending field.
    """
    parts = text.split(":")
    fam_text = parts[0].strip().lower()
    try:
        family = Family(fam_text)
    except ValueError:
        raise ShapeError(f"unknown shape family {parts[0]!r} at position 0") from None
    if len(parts) < 2:
        raise ShapeError(f"missing order after {fam_text!r} at position {len(parts[0])}")
    n_pos = len(parts[0]) + 1
    n_text = parts[1].strip()
    try:
        n = int(n_text)
    except ValueError:
        raise ShapeError(f"invalid order {parts[1]!r} at position {n_pos}") from None
    if n < 1:
        raise ShapeError(f"order must be >= 1, got {n} at position {n_pos}")
    variant: Optional[Variant] = None
    if len(parts) >= 3:
        v_pos = n_pos + len(parts[1]) + 1
        if len(parts) > 3:
            raise ShapeError(f"unexpected extra field at position {v_pos}")
        vtype = _VARIANT_TYPE.get(family)
        if vtype is None:
            raise ShapeError(
                f"{family.value} takes no variant, got {parts[2]!r} at position {v_pos}")
        try:
            variant = vtype(parts[2].strip().lower())
        except ValueError:
            raise ShapeError(
                f"invalid {family.value} variant {parts[2]!r} at position {v_pos}") from None
    return ShapeSpec(family, n, variant)


def _staircase_spans(n: int, corner: Corner) -> list[tuple[int, int]]:
    # rows j = 0..n-1 inside the box [0, n] x [0, n]
    if corner is Corner.DL:
        return [(0, n - j) for j in range(n)]
    if corner is Corner.DR:
        return [(j, n) for j in range(n)]
    if corner is Corner.UL:
        return [(0, j + 1) for j in range(n)]
    return [(n - j - 1, n) for j in range(n)]  # UR


def build(spec: ShapeSpec, offset: tuple[int, int] = (0, 0)) -> CellRegion:
    """Construct the canonical region for spec, optionally translated.

    Canonical rows, bottom to top:

    * aztec n: rows -n..n-1, row j spans [-(n-j'), n-j') with j' = j for
      j >= 0 and j' = -j-1 below; widths 2, 4, ..., 2n, 2n, ..., 4, 2.
    * aztec-half top: rows 0..n-1 of the aztec; the other sides are the
      matching parts of the full diamond, kept in place.
    * biscuit n: rows -(n-1)..n-1, row j spans [|j|-n+1, n-|j|); widths
      1, 3, ..., 2n-1, ..., 3, 1; quasi-center at the origin, true center
      and vertical symmetry axis at x = 1/2.
    * biscuit-half larger: rows 0..n-1 of the biscuit (the half that keeps
      the widest row).  smaller: the (n-1)-row half, re-based widest row
      down, i.e. the same footprint as biscuit-half larger of order n-1.
    * staircase: rows 0..n-1 in the box [0, n] x [0, n]; dl spans [0, n-j),
      and ul/ur/dr are its reflections within the box.
    """
    n = spec.n
    fam = spec.family
    row0 = 0
    spans: list[tuple[int, int]]
    if fam is Family.AZTEC:
        row0 = -n
        spans = []
        for j in range(-n, n):
            w = n - (j if j >= 0 else -j - 1)
            spans.append((-w, w))
    elif fam is Family.AZTEC_HALF:
        side = spec.variant
        if side is Side.TOP:
            spans = [(-(n - j), n - j) for j in range(n)]
        elif side is Side.BOTTOM:
            row0 = -n
            spans = [(-(n + j + 1), n + j + 1) for j in range(-n, 0)]
        else:
            row0 = -n
            widths = [n - (j if j >= 0 else -j - 1) for j in range(-n, n)]
            if side is Side.RIGHT:
                spans = [(0, w) for w in widths]
            else:
                spans = [(-w, 0) for w in widths]
    elif fam is Family.BISCUIT:
        row0 = -(n - 1)
        spans = [(abs(j) - n + 1, n - abs(j)) for j in range(-(n - 1), n)]
    elif fam is Family.BISCUIT_HALF:
        if spec.variant is Part.LARGER:
            spans = [(j - n + 1, n - j) for j in range(n)]
        else:
            spans = [(j - n + 2, n - 1 - j) for j in range(n - 1)]
    else:
        spans = _staircase_spans(n, spec.variant)
    region = CellRegion(row0, tuple(spans))
    if offset != (0, 0):
        region = region.translate(*offset)
    return region


def vertical_axis(spec: ShapeSpec) -> Axis:
    """The vertical symmetry axis of the canonical shape, where one exists.

    Aztec diamonds and their top/bottom halves are symmetric about the lattice
    line x = 0; biscuits and both their upper/lower halves about x = 1/2.
    """
    if spec.family in (Family.AZTEC, Family.AZTEC_HALF):
        if spec.family is Family.AZTEC_HALF and spec.variant in (Side.LEFT, Side.RIGHT):
            raise ShapeError(f"{spec} has no vertical symmetry axis")
        return Axis(0)
    if spec.family in (Family.BISCUIT, Family.BISCUIT_HALF):
        return Axis(0, half=True)
    raise ShapeError(f"{spec} has no vertical symmetry axis")


def _clip_columns(region: CellRegion, lo: Optional[int], hi: Optional[int],
                  rows: Optional[tuple[int, int]] = None) -> CellRegion:
    """Intersect with the column band [lo, hi) and optionally a row band."""
    kept = []
    for j, a, b in region.rows():
        if rows is not None and not (rows[0] <= j < rows[1]):
            continue
        a2 = a if lo is None else max(a, lo)
        b2 = b if hi is None else min(b, hi)
        if a2 < b2:
            kept.append((j, a2, b2))
    if not kept:
        return CellRegion(0, (), region.origin)
    js = [j for j, _, _ in kept]
    if js != list(range(js[0], js[0] + len(js))):
        raise ShapeError("clip produced a region with a gap between rows")
    return CellRegion(js[0], tuple((a, b) for _, a, b in kept), region.origin)


def split_half(region: CellRegion, spec: ShapeSpec) -> tuple[CellRegion, CellRegion, Axis]:
    """Split an Aztec diamond or biscuit vertically into its two halves.

    The cut runs along the lattice line through the region's center
    (Aztec) or quasi-center (biscuit); horizontal splits are obtained by
    rotating first.  Returns (left part, right part, axis), where the axis is
    the shape's vertical symmetry line: the cut line itself for an Aztec
    diamond, and the half-unit line just right of the cut for a biscuit.  An
    Aztec diamond splits into congruent halves; a biscuit's right part is
    larger by one column (n^2 cells against (n-1)^2).
    """
    p = region.origin[0]
    if spec.family is Family.AZTEC:
        axis = Axis(p)
    elif spec.family is Family.BISCUIT:
        axis = Axis(p, half=True)
    else:
        raise ShapeError(f"split_half applies to aztec or biscuit, not {spec}")
    left = _clip_columns(region, None, p)
    right = _clip_columns(region, p, None)
    return left, right, axis


def split_staircases(spec: ShapeSpec) -> list[tuple[ShapeSpec, CellRegion]]:
    """Decompose an Aztec diamond or biscuit into four labeled staircases.

    The vertical and horizontal lattice lines through the center/quasi-center
    cut the canonical region into quadrant pieces, one staircase of each
    orientation: orders (n, n, n, n) for an Aztec diamond and
    (n, n-1, n-2, n-1) for a biscuit, where order 0 is the empty region.
    Biscuits of order 1 are a single cell and cannot be decomposed.
    """
    n = spec.n
    if spec.family is Family.AZTEC:
        orders = (n, n, n, n)
    elif spec.family is Family.BISCUIT:
        if n < 2:
            raise ShapeError("a biscuit of order 1 has no four-staircase decomposition")
        orders = (n, n - 1, n - 2, n - 1)
    else:
        raise ShapeError(f"split_staircases applies to aztec or biscuit, not {spec}")
    region = build(spec)
    top = region.row0 + region.height
    quads = [
        _clip_columns(region, 0, None, rows=(0, top)),       # i >= 0, j >= 0
        _clip_columns(region, None, 0, rows=(0, top)),       # i < 0,  j >= 0
        _clip_columns(region, None, 0, rows=(region.row0, 0)),  # i < 0, j < 0
        _clip_columns(region, 0, None, rows=(region.row0, 0)),  # i >= 0, j < 0
    ]
    corners = (Corner.DL, Corner.DR, Corner.UR, Corner.UL)
    return [(staircase(k, c), q) for k, c, q in zip(orders, corners, quads)]


def transform(region: CellRegion, g: Dihedral) -> CellRegion:
    """Image of the region under a lattice symmetry fixing the origin.

    Cell count is always preserved.  The four transposing elements require the
    region to be column-convex as well (every shape built here is); otherwise
    the image is not representable and a ShapeError is raised.
    """
    if g is Dihedral.IDENTITY:
        return region
    origin = g.apply_point(*region.origin)
    return CellRegion.from_cells(
        (g.apply_cell(i, j) for i, j in region.cells()), origin)
