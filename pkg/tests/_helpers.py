"""Independent reference oracles used only by the tests.

These deliberately avoid the library's search code: packing numbers come
from full subset enumeration, piercing numbers from exhaustive grid
subset enumeration, and intersection from candidate-corner containment,
so they can referee the production implementations.
"""

from __future__ import annotations

import itertools

from boxpierce import Box, BoxFamily, Point, candidate_grid, intersects


def family(bounds_list, lines=None, dim=None) -> BoxFamily:
    return BoxFamily.of([Box.from_bounds(b) for b in bounds_list], lines=lines, dim=dim)


def family_1d(pairs, lines=None) -> BoxFamily:
    return family([(p,) for p in pairs], lines=lines, dim=1)


def brute_force_nu(f: BoxFamily) -> int:
    """Largest pairwise-disjoint subset, by checking all 2^n subsets."""
    boxes = f.boxes
    best = 0
    for r in range(len(boxes), 0, -1):
        if r <= best:
            break
        for subset in itertools.combinations(range(len(boxes)), r):
            if all(not intersects(boxes[i], boxes[j])
                   for i, j in itertools.combinations(subset, 2)):
                best = r
                break
    return best


def brute_force_tau(f: BoxFamily, limit: int | None = None) -> int | None:
    """Smallest grid subset hitting every box, by exhaustive enumeration.

    Tries sizes 1..limit (default: number of boxes) and returns None if
    nothing within the limit works.
    """
    boxes = f.boxes
    if not boxes:
        return 0
    grid = candidate_grid(f)
    top = len(boxes) if limit is None else limit
    for t in range(1, top + 1):
        for subset in itertools.combinations(grid, t):
            if all(any(b.contains(p) for p in subset) for b in boxes):
                return t
    return None


def corner_candidate_intersects(p: Box, q: Box) -> bool:
    """Boxes intersect iff some per-axis choice of left endpoints lies in both."""
    choices = [(a.lo, b.lo) for a, b in zip(p.sides, q.sides)]
    return any(
        p.contains(Point(c)) and q.contains(Point(c))
        for c in itertools.product(*choices)
    )


def is_sound(f: BoxFamily, points) -> bool:
    return all(any(b.contains(p) for p in points) for b in f.boxes)


def unsound_indices(f: BoxFamily, points) -> list[int]:
    return [i for i, b in enumerate(f.boxes) if not any(b.contains(p) for p in points)]
