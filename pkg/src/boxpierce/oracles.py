"""Ground-truth solvers for small box families.

`nu_exact` computes the packing number (maximum pairwise-disjoint
subfamily) by branch and bound over the intersection graph, and
`tau_exact` the piercing number (minimum point set meeting every box)
by iterative-deepening search over a canonical candidate grid. Both are
exact and deterministic: identical inputs yield identical witnesses.

Exactness is what the constructive piercing algorithms lean on for
their certified guarantees, so families larger than the configured cap
are refused outright instead of being solved approximately.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .geometry import BoxFamily, Point, intersects

DEFAULT_CAP = 32


class CapExceeded(RuntimeError):
    """Family is larger than the exact-oracle cap."""


def check_cap(f: BoxFamily, cap: int) -> None:
    if len(f) > cap:
        raise CapExceeded(f"family has {len(f)} boxes, exact-oracle cap is {cap}")


@dataclass(frozen=True)
class NuResult:
    """Packing number with a witness of pairwise-disjoint box indices."""

    nu: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class TauResult:
    """Piercing number with a witness point set meeting every box."""

    tau: int
    witness: tuple[Point, ...]


def _adjacency(boxes) -> list[int]:
    """Bitmask per box of the other boxes it intersects."""
    n = len(boxes)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if intersects(boxes[i], boxes[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _greedy_disjoint(adj: list[int], avail: int) -> int:
    """Greedily take compatible boxes in index order; returns the chosen mask."""
    taken = 0
    blocked = 0
    m = avail
    while m:
        bit = m & -m
        m &= m - 1
        if bit & blocked:
            continue
        i = bit.bit_length() - 1
        taken |= bit
        blocked |= adj[i] | bit
    return taken


def nu_exact(f: BoxFamily, cap: int = DEFAULT_CAP) -> NuResult:
    """Exact packing number: maximum independent set in the intersection graph.

    Branch and bound on the lowest-index available box, include-branch
    first, seeded with the greedy solution; the greedy value only prunes,
    it never changes the result.
    """
    check_cap(f, cap)
    boxes = f.boxes
    n = len(boxes)
    if n == 0:
        return NuResult(0, ())
    adj = _adjacency(boxes)

    best = _greedy_disjoint(adj, (1 << n) - 1)
    best_size = best.bit_count()

    def rec(avail: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        if size + avail.bit_count() <= best_size:
            return
        if not avail:
            if size > best_size:
                best, best_size = chosen, size
            return
        bit = avail & -avail
        i = bit.bit_length() - 1
        rec(avail & ~adj[i] & ~bit, chosen | bit, size + 1)
        rec(avail & ~bit, chosen, size)

    rec((1 << n) - 1, 0, 0)
    witness = tuple(i for i in range(n) if (best >> i) & 1)
    return NuResult(best_size, witness)


def candidate_grid(f: BoxFamily) -> list[Point]:
    """Canonical piercing positions: product of distinct left endpoints per axis.

    Any piercing point can slide, per axis independently, down to the
    largest left endpoint among boxes containing it without leaving any
    of them, so an optimal piercing using only these grid points always
    exists. Points come out in lexicographic order.
    """
    if not f.boxes:
        raise ValueError("candidate grid of an empty family is undefined")
    per_axis = [sorted({b.sides[ax].lo for b in f.boxes}) for ax in range(f.dim)]
    return [Point(coords) for coords in itertools.product(*per_axis)]


def tau_exact(f: BoxFamily, cap: int = DEFAULT_CAP) -> TauResult:
    """Exact piercing number over the candidate grid.

    Iterative deepening: at depth limit t, pick the lowest-index
    uncovered box and branch on the grid points inside it (in grid
    order); the first feasible t is the piercing number. A greedy
    pairwise-disjoint count of the uncovered boxes prunes branches that
    cannot finish within the remaining depth.
    """
    check_cap(f, cap)
    boxes = f.boxes
    n = len(boxes)
    if n == 0:
        return TauResult(0, ())
    grid = candidate_grid(f)
    covers = []
    points = []
    for p in grid:
        mask = 0
        for i, b in enumerate(boxes):
            if b.contains(p):
                mask |= 1 << i
        if mask:
            covers.append(mask)
            points.append(p)
    inside = [[] for _ in range(n)]
    for pi, mask in enumerate(covers):
        m = mask
        while m:
            bit = m & -m
            m &= m - 1
            inside[bit.bit_length() - 1].append(pi)

    adj = _adjacency(boxes)
    full = (1 << n) - 1

    def disjoint_lb(uncovered: int) -> int:
        return _greedy_disjoint(adj, uncovered).bit_count()

    chosen: list[int] = []

    def dfs(uncovered: int, depth_left: int) -> bool:
        if not uncovered:
            return True
        if depth_left == 0 or disjoint_lb(uncovered) > depth_left:
            return False
        i = (uncovered & -uncovered).bit_length() - 1
        for pi in inside[i]:
            chosen.append(pi)
            if dfs(uncovered & ~covers[pi], depth_left - 1):
                return True
            chosen.pop()
        return False

    # One point per box always suffices, so some t <= n is feasible.
    for t in range(max(1, disjoint_lb(full)), n + 1):
        chosen.clear()
        if dfs(full, t):
            return TauResult(t, tuple(points[pi] for pi in chosen))
    raise AssertionError("unreachable: piercing with one point per box must exist")


def common_point(f: BoxFamily) -> Point:
    """A point in every member of a pairwise-intersecting family.

    Boxes have the Helly property per axis (intervals pairwise overlap
    iff they share a point), so the coordinate-wise maximum of left
    endpoints works. Raises on the first disjoint pair found.
    """
    if not f.boxes:
        raise ValueError("common point of an empty family is undefined")
    boxes = f.boxes
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            if not intersects(boxes[i], boxes[j]):
                raise ValueError(f"boxes {i} and {j} are disjoint; no common point exists")
    coords = tuple(max(b.sides[ax].lo for b in boxes) for ax in range(f.dim))
    return Point(coords)
