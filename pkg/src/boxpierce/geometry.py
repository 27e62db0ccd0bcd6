"""Exact integer geometry for families of axis-parallel boxes.

Coordinates are 64-bit integers and boxes are closed products of
coordinate intervals, so touching boxes intersect and every comparison
is exact (no epsilons anywhere). A family may carry a two-line
certificate: two parallel axis-aligned lines such that every member
meets at least one of them.

All values are immutable after construction and every operation is a
pure function, so concurrent reads are safe.
"""

from __future__ import annotations

from dataclasses import dataclass

COORD_BOUND = 2**63


def _check_coord(value, where: str) -> int:
    if type(value) is not int:
        raise ValueError(f"{where}: coordinate must be an integer, got {value!r}")
    if not -COORD_BOUND <= value < COORD_BOUND:
        raise ValueError(f"{where}: coordinate {value} outside 64-bit range")
    return value


@dataclass(frozen=True)
class Interval:
    """Closed integer interval [lo, hi]; lo == hi is a valid degenerate interval."""

    lo: int
    hi: int

    def __post_init__(self):
        _check_coord(self.lo, "interval lo")
        _check_coord(self.hi, "interval hi")
        if self.lo > self.hi:
            raise ValueError(f"interval has lo > hi: [{self.lo}, {self.hi}]")

    def contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


@dataclass(frozen=True)
class Point:
    """Point with one integer coordinate per axis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if not self.coords:
            raise ValueError("point needs at least one coordinate")
        for i, c in enumerate(self.coords):
            _check_coord(c, f"point coordinate {i}")

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class Box:
    """Axis-parallel closed box: the product of one Interval per axis."""

    sides: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(self.sides))
        if not self.sides:
            raise ValueError("box needs at least one axis")

    @classmethod
    def from_bounds(cls, bounds) -> Box:
        """Build from [(lo, hi), ...] pairs, one per axis."""
        return cls(tuple(Interval(lo, hi) for lo, hi in bounds))

    def bounds(self) -> tuple[tuple[int, int], ...]:
        return tuple((iv.lo, iv.hi) for iv in self.sides)

    @property
    def dim(self) -> int:
        return len(self.sides)

    def contains(self, p: Point) -> bool:
        """True iff lo <= coordinate <= hi on every axis (closed semantics)."""
        if p.dim != self.dim:
            raise ValueError(f"dimension mismatch: box is {self.dim}-d, point is {p.dim}-d")
        return all(iv.contains(c) for iv, c in zip(self.sides, p.coords))


def intersects(p: Box, q: Box) -> bool:
    """Closed-box overlap test: true iff the intervals overlap on every axis.

    Touching counts: boxes sharing only a face, edge or corner intersect.
    """
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim}-d vs {q.dim}-d")
    return all(a.overlaps(b) for a, b in zip(p.sides, q.sides))


@dataclass(frozen=True)
class TwoLines:
    """Two parallel lines orthogonal to `axis`, at coordinates c1 <= c2.

    A family annotated with this certifies that every member's interval
    on `axis` contains c1 or c2.
    """

    axis: int
    c1: int
    c2: int

    def __post_init__(self):
        if type(self.axis) is not int or self.axis < 0:
            raise ValueError(f"line axis must be a non-negative integer, got {self.axis!r}")
        _check_coord(self.c1, "line c1")
        _check_coord(self.c2, "line c2")
        if self.c1 > self.c2:
            raise ValueError(f"lines out of order: c1={self.c1} > c2={self.c2}")


@dataclass(frozen=True)
class BoxFamily:
    """Finite multiset of same-dimension boxes, optionally with a two-line certificate."""

    dim: int
    boxes: tuple[Box, ...]
    lines: TwoLines | None = None

    def __post_init__(self):
        object.__setattr__(self, "boxes", tuple(self.boxes))
        if type(self.dim) is not int or self.dim < 1:
            raise ValueError(f"family dimension must be a positive integer, got {self.dim!r}")
        for i, b in enumerate(self.boxes):
            if b.dim != self.dim:
                raise ValueError(f"box {i} has dimension {b.dim}, family has {self.dim}")
        if self.lines is not None:
            ln = self.lines
            if ln.axis >= self.dim:
                raise ValueError(f"line axis {ln.axis} out of range for dimension {self.dim}")
            for i, b in enumerate(self.boxes):
                iv = b.sides[ln.axis]
                if not (iv.contains(ln.c1) or iv.contains(ln.c2)):
                    raise ValueError(
                        f"box {i} violates the two-line condition: "
                        f"[{iv.lo}, {iv.hi}] on axis {ln.axis} misses both {ln.c1} and {ln.c2}"
                    )

    @classmethod
    def of(cls, boxes, lines: TwoLines | None = None, dim: int | None = None) -> BoxFamily:
        """Build a family, inferring the dimension from the first box."""
        boxes = tuple(boxes)
        if dim is None:
            if not boxes:
                raise ValueError("cannot infer dimension of an empty family; pass dim=")
            dim = boxes[0].dim
        return cls(dim, boxes, lines)

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self):
        return iter(self.boxes)

    def replace_boxes(self, boxes, lines: TwoLines | None = None) -> BoxFamily:
        return BoxFamily(self.dim, tuple(boxes), lines)


@dataclass(frozen=True)
class FourWaySplit:
    """Partition of a family at two coordinates a <= b on one axis.

    minus holds boxes entirely left of a (r < a), plus entirely right of
    b (l > b), plusminus strictly between (l > a and r < b), and zero the
    rest; every zero box contains a or b on the split axis.
    """

    minus: BoxFamily
    plusminus: BoxFamily
    plus: BoxFamily
    zero: BoxFamily
    a: int
    b: int


def _check_axis(f: BoxFamily, axis: int) -> None:
    if not 0 <= axis < f.dim:
        raise ValueError(f"axis {axis} out of range for dimension {f.dim}")


def split_three(f: BoxFamily, axis: int, x: int) -> tuple[BoxFamily, BoxFamily, BoxFamily]:
    """Partition into ({r < x}, {interval contains x}, {l > x}) on the axis.

    Returns (minus, zero, plus); order within each part preserves input order.
    """
    _check_axis(f, axis)
    _check_coord(x, "split coordinate")
    minus, zero, plus = [], [], []
    for b in f.boxes:
        iv = b.sides[axis]
        if iv.hi < x:
            minus.append(b)
        elif iv.lo > x:
            plus.append(b)
        else:
            zero.append(b)
    return (f.replace_boxes(minus, f.lines),
            f.replace_boxes(zero, f.lines),
            f.replace_boxes(plus, f.lines))


def split_four(f: BoxFamily, axis: int, a: int, b: int) -> FourWaySplit:
    """Partition at two coordinates a <= b on the axis.

    Membership is decided in order: r < a -> minus; l > b -> plus;
    (l > a and r < b) -> plusminus; everything else -> zero. Zero boxes
    necessarily contain a or b on the axis.
    """
    _check_axis(f, axis)
    _check_coord(a, "split coordinate a")
    _check_coord(b, "split coordinate b")
    if a > b:
        raise ValueError(f"split coordinates out of order: a={a} > b={b}")
    minus, plusminus, plus, zero = [], [], [], []
    for box in f.boxes:
        iv = box.sides[axis]
        if iv.hi < a:
            minus.append(box)
        elif iv.lo > b:
            plus.append(box)
        elif iv.lo > a and iv.hi < b:
            plusminus.append(box)
        else:
            zero.append(box)
    return FourWaySplit(
        minus=f.replace_boxes(minus, f.lines),
        plusminus=f.replace_boxes(plusminus, f.lines),
        plus=f.replace_boxes(plus, f.lines),
        zero=f.replace_boxes(zero, f.lines),
        a=a,
        b=b,
    )


def project_onto_hyperplane(f: BoxFamily, axis: int, x: int) -> BoxFamily:
    """Drop `axis` from every box, requiring each to contain x there.

    Boxes crossing a common hyperplane intersect iff their projections
    do, so packing and piercing structure is preserved. Any two-line
    annotation is dropped. Box count and order are preserved.
    """
    if f.dim == 1:
        raise ValueError("cannot project a 1-d family")
    _check_axis(f, axis)
    _check_coord(x, "hyperplane coordinate")
    for i, b in enumerate(f.boxes):
        if not b.sides[axis].contains(x):
            raise ValueError(f"box {i} does not meet the hyperplane axis{axis}={x}")
    boxes = tuple(Box(b.sides[:axis] + b.sides[axis + 1:]) for b in f.boxes)
    return BoxFamily(f.dim - 1, boxes, None)


def lift_points(points, axis: int, x: int) -> list[Point]:
    """Re-embed (d-1)-dimensional points by inserting coordinate x at `axis`."""
    _check_coord(x, "lift coordinate")
    return [Point(p.coords[:axis] + (x,) + p.coords[axis:]) for p in points]
