"""Instance generators: the extremal two-line families and seeded random input.

The 5-box gadget realizes the worst case of the two-line bound: its
intersection graph is the 5-cycle, so no point can meet three of its
boxes, giving packing number 2 but piercing number 3. Tiling disjoint
translated copies (plus one isolated box when the target packing number
is odd) scales this to packing number n with piercing number
floor(3n/2), matching the two-line guarantee exactly.

Random generation is deterministic under (spec, seed); the generator
tag below is written into instance metadata so files are reproducible
only when the tag matches.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .geometry import Box, BoxFamily, Interval, TwoLines

GADGET_TAG = "boxpierce.gadget/v1"
EXTREMAL_TAG = "boxpierce.extremal/v1"
RANDOM_TAG = "boxpierce.random/v1"

#: Gadget boxes, cyclically intersecting: each meets the next (mod 5) and
#: no other; every box meets the line y=0 or y=2.
_GADGET_BOUNDS = (
    ((0, 7), (0, 1)),
    ((0, 1), (0, 5)),
    ((0, 4), (2, 5)),
    ((3, 6), (2, 5)),
    ((6, 7), (0, 5)),
)
_GADGET_LINES = TwoLines(axis=1, c1=0, c2=2)

# x-extent of the gadget is 7; translating by 10 keeps copies disjoint.
_COPY_STRIDE = 10


def gen_gadget() -> BoxFamily:
    """The 5-box two-line family with packing number 2 and piercing number 3."""
    boxes = tuple(Box.from_bounds(b) for b in _GADGET_BOUNDS)
    return BoxFamily(2, boxes, _GADGET_LINES)


def _shift_x(box: Box, dx: int) -> Box:
    x, rest = box.sides[0], box.sides[1:]
    return Box((Interval(x.lo + dx, x.hi + dx),) + rest)


def gen_extremal_two_line(n: int) -> BoxFamily:
    """Two-line family with packing number n and piercing number floor(3n/2).

    floor(n/2) disjoint gadget copies translated along x; when n is odd,
    one extra box meeting the lower line, disjoint from every copy.
    """
    if type(n) is not int or n < 1:
        raise ValueError(f"need n >= 1, got {n!r}")
    gadget = gen_gadget()
    boxes: list[Box] = []
    copies = n // 2
    for i in range(copies):
        boxes.extend(_shift_x(b, _COPY_STRIDE * i) for b in gadget.boxes)
    if n % 2 == 1:
        x0 = _COPY_STRIDE * copies
        boxes.append(Box.from_bounds(((x0, x0 + 1), (0, 1))))
    return BoxFamily(2, tuple(boxes), _GADGET_LINES)


@dataclass(frozen=True)
class RandomSpec:
    """Deterministic random-family parameters.

    With two_line=True (planar only), each box's interval on axis 1 is
    clamped to contain one of the two lines, chosen uniformly, so the
    two-line condition holds by construction.
    """

    n_boxes: int
    dim: int = 2
    coord_range: tuple[int, int] = (0, 20)
    seed: int = 0
    two_line: bool = False
    lines: tuple[int, int] | None = None

    def __post_init__(self):
        if type(self.n_boxes) is not int or self.n_boxes < 0:
            raise ValueError(f"n_boxes must be a non-negative integer, got {self.n_boxes!r}")
        if type(self.dim) is not int or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim!r}")
        lo, hi = self.coord_range
        if lo > hi:
            raise ValueError(f"empty coordinate range: {self.coord_range}")
        if self.two_line:
            if self.dim != 2:
                raise ValueError("two-line instances are planar; need dim=2")
            c1, c2 = self.effective_lines()
            if not (lo <= c1 <= c2 <= hi):
                raise ValueError(f"lines {c1}, {c2} outside coordinate range {self.coord_range}")

    def effective_lines(self) -> tuple[int, int]:
        if self.lines is not None:
            c1, c2 = self.lines
            return (c1, c2) if c1 <= c2 else (c2, c1)
        lo, hi = self.coord_range
        return (lo + (hi - lo) // 3, lo + 2 * (hi - lo) // 3)


def gen_random(spec: RandomSpec) -> BoxFamily:
    """Random family, byte-for-byte reproducible under a fixed spec.

    Per box and axis, two endpoints are drawn uniformly from the
    coordinate range and swapped into order; degenerate intervals are
    allowed. The draw order (endpoints, then the two-line clamp choice,
    box by box) is part of the format contract.
    """
    rng = random.Random(spec.seed)
    lo, hi = spec.coord_range
    c1 = c2 = 0
    if spec.two_line:
        c1, c2 = spec.effective_lines()
    boxes = []
    for _ in range(spec.n_boxes):
        sides = []
        for _ax in range(spec.dim):
            u, v = rng.randint(lo, hi), rng.randint(lo, hi)
            if u > v:
                u, v = v, u
            sides.append(Interval(u, v))
        if spec.two_line:
            c = c1 if rng.randint(0, 1) == 0 else c2
            iv = sides[1]
            if iv.lo > c:
                iv = Interval(c, iv.hi)
            elif iv.hi < c:
                iv = Interval(iv.lo, c)
            sides[1] = iv
        boxes.append(Box(tuple(sides)))
    lines = TwoLines(axis=1, c1=c1, c2=c2) if spec.two_line else None
    return BoxFamily(spec.dim, tuple(boxes), lines)


def random_meta(spec: RandomSpec) -> dict:
    """Instance metadata identifying the generator and its parameters."""
    meta = {
        "generator": RANDOM_TAG,
        "seed": spec.seed,
        "description": (
            f"random family: {spec.n_boxes} boxes, dim={spec.dim}, "
            f"coords in [{spec.coord_range[0]}, {spec.coord_range[1]}]"
            + (", two-line" if spec.two_line else "")
        ),
    }
    return meta
