"""Constructive piercing algorithms with certified size guarantees.

Four procedures, each returning a `PierceReport` whose point set meets
every input box and whose size never exceeds the reported guarantee:

  pierce_intervals_1d  greedy right-endpoint sweep; exactly nu points,
                       which is optimal in one dimension.
  pierce_two_lines     for planar families in which every box meets one
                       of two parallel lines: sweep orthogonally to the
                       lines, emitting at most 3 points per 2 units of
                       packing number; guarantee floor(3*nu/2).
  pierce_planar        three-way split of the plane at two thresholds;
                       the middle strip crosses a vertical line and is
                       handed to the two-line sweep. Guarantee h(nu)
                       under the balanced policy, bound_prop3(nu) under
                       the DP-optimal policy.
  pierce_ddim          dimension recursion for d >= 3: split on axis 0,
                       project the boxes crossing the split hyperplane
                       one dimension down, recurse. Guarantee
                       bound_lemma1(nu, d) (balanced) or
                       bound_prop1(nu, d) (DP-optimal).

The exact packing number is computed once at the root (and inside
threshold searches); recursive calls receive the upper bounds the split
inequalities guarantee instead of re-solving subfamilies. Thresholds
realize the continuous cut positions discretely: the left threshold is
the smallest right endpoint at which the prefix first packs k+1
pairwise-disjoint boxes, which keeps every inequality exact. All
tie-breaking is fixed (lowest axis, smallest coordinate, lowest box
index), so runs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .bounds import bound_lemma1, bound_prop1, bound_prop3, h
from .geometry import (
    BoxFamily,
    Point,
    TwoLines,
    lift_points,
    project_onto_hyperplane,
    split_four,
    split_three,
)
from .oracles import DEFAULT_CAP, check_cap, common_point, nu_exact


class SplitPolicy(str, Enum):
    """How recursion split sizes are chosen."""

    BALANCED = "balanced"
    DP_OPTIMAL = "dp"


@dataclass(frozen=True)
class TraceNode:
    """One recursion event: where the family was split and how it divided."""

    node: int
    parent: int | None
    op: str
    dim: int
    bound: int
    depth: int
    axis: int | None = None
    lo: int | None = None
    hi: int | None = None
    sizes: tuple[int, ...] = ()


@dataclass(frozen=True)
class PierceReport:
    """Piercing set plus the size bound certified for this run.

    `nu_used` is the exact packing number the run was entered with and
    `guarantee` the bound implied by it; len(points) <= guarantee always.
    """

    points: tuple[Point, ...]
    guarantee: float
    nu_used: int
    trace: tuple[TraceNode, ...] = field(default=(), repr=False)

    @property
    def size(self) -> int:
        return len(self.points)


class _Tracer:
    def __init__(self):
        self.nodes: list[TraceNode] = []

    def add(self, parent: int | None, **kw) -> int:
        node = len(self.nodes)
        self.nodes.append(TraceNode(node=node, parent=parent, **kw))
        return node


def _report(points, guarantee, nu_used: int, tracer: _Tracer) -> PierceReport:
    return PierceReport(
        points=tuple(points),
        guarantee=float(guarantee),
        nu_used=nu_used,
        trace=tuple(tracer.nodes),
    )


# ---------------------------------------------------------------------------
# thresholds


def _threshold_low(f: BoxFamily, axis: int, k: int, cap: int) -> int | None:
    """Smallest right endpoint a with nu({r <= a}) >= k+1, or None.

    Then {r < a} packs at most k disjoint boxes while {r <= a} packs
    k+1, all disjoint from {l > a}. The prefix packing number is a
    nondecreasing step function of a changing only at right endpoints,
    so binary search over them is exact.
    """
    rights = sorted({b.sides[axis].hi for b in f.boxes})
    if not rights:
        return None

    def prefix_nu(x: int) -> int:
        sub = f.replace_boxes((b for b in f.boxes if b.sides[axis].hi <= x), f.lines)
        return nu_exact(sub, cap).nu

    if prefix_nu(rights[-1]) <= k:  # the full family: nu(f) <= k
        return None
    lo, hi = 0, len(rights) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if prefix_nu(rights[mid]) >= k + 1:
            hi = mid
        else:
            lo = mid + 1
    return rights[lo]


def _threshold_high(f: BoxFamily, axis: int, m: int, cap: int) -> int | None:
    """Largest left endpoint b with nu({l >= b}) >= m+1, or None (mirror)."""
    lefts = sorted({b.sides[axis].lo for b in f.boxes})
    if not lefts:
        return None

    def suffix_nu(x: int) -> int:
        sub = f.replace_boxes((b for b in f.boxes if b.sides[axis].lo >= x), f.lines)
        return nu_exact(sub, cap).nu

    if suffix_nu(lefts[0]) <= m:
        return None
    lo, hi = 0, len(lefts) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if suffix_nu(lefts[mid]) >= m + 1:
            lo = mid
        else:
            hi = mid - 1
    return lefts[lo]


def find_threshold(f: BoxFamily, axis: int, k: int, cap: int = DEFAULT_CAP) -> int:
    """Public threshold search; raises if the packing number is <= k."""
    check_cap(f, cap)
    a = _threshold_low(f, axis, k, cap)
    if a is None:
        raise ValueError(f"no threshold: the family packs at most {k} disjoint boxes")
    return a


def find_threshold_hi(f: BoxFamily, axis: int, m: int, cap: int = DEFAULT_CAP) -> int:
    """Mirrored threshold search; raises if the packing number is <= m."""
    check_cap(f, cap)
    b = _threshold_high(f, axis, m, cap)
    if b is None:
        raise ValueError(f"no threshold: the family packs at most {m} disjoint boxes")
    return b


# ---------------------------------------------------------------------------
# 1-d sweep


def _stab_points_1d(f: BoxFamily) -> list[Point]:
    order = sorted(range(len(f)), key=lambda i: (f.boxes[i].sides[0].hi, f.boxes[i].sides[0].lo, i))
    stabs: list[int] = []
    for i in order:
        iv = f.boxes[i].sides[0]
        if not stabs or iv.lo > stabs[-1]:
            stabs.append(iv.hi)
    return [Point((s,)) for s in stabs]


def pierce_intervals_1d(f: BoxFamily) -> PierceReport:
    """Greedy sweep over intervals: stab the smallest uncovered right endpoint.

    Emits exactly nu(f) points (the stabbed intervals are pairwise
    disjoint), which is also optimal, so guarantee = nu = size.
    """
    if f.dim != 1:
        raise ValueError(f"interval sweep needs a 1-d family, got dimension {f.dim}")
    tracer = _Tracer()
    points = _stab_points_1d(f)
    tracer.add(None, op="sweep-1d", dim=1, bound=len(points), depth=0, sizes=(len(f),))
    return _report(points, len(points), len(points), tracer)


# ---------------------------------------------------------------------------
# two-line sweep


def _line_point(sweep_axis: int, sweep_val: int, line_val: int) -> Point:
    coords = [0, 0]
    coords[sweep_axis] = sweep_val
    coords[1 - sweep_axis] = line_val
    return Point(tuple(coords))


def _two_line_sweep(f: BoxFamily, bound: int, cap: int, tracer: _Tracer,
                    parent: int | None, depth: int) -> list[Point]:
    """Sweep orthogonally to the certificate lines; bound >= nu(f) is required.

    Per round: the strict prefix below the threshold packs at most one
    disjoint box, so one common point covers it; the boxes crossing the
    threshold each meet a line, so the two crossing points cover them;
    the suffix lost two disjoint boxes, so its bound drops by 2.
    """
    lines = f.lines
    sweep_axis = 1 - lines.axis
    points: list[Point] = []
    remaining, b = f, bound
    while len(remaining):
        if b > 1:
            t = _threshold_low(remaining, sweep_axis, 1, cap)
        else:
            t = None  # bound <= 1 on a nonempty family: pairwise intersecting
        if t is None:
            points.append(common_point(remaining))
            tracer.add(parent, op="common-point", dim=2, bound=b, depth=depth,
                       sizes=(len(remaining),))
            break
        minus, zero, plus = split_three(remaining, sweep_axis, t)
        if len(minus):
            points.append(common_point(minus))
        points.append(_line_point(sweep_axis, t, lines.c1))
        if lines.c2 != lines.c1:
            points.append(_line_point(sweep_axis, t, lines.c2))
        parent = tracer.add(parent, op="two-line-step", dim=2, bound=b, depth=depth,
                            axis=sweep_axis, lo=t,
                            sizes=(len(minus), len(zero), len(plus)))
        remaining, b, depth = plus, b - 2, depth + 1
    return points


def pierce_two_lines(f: BoxFamily, cap: int = DEFAULT_CAP) -> PierceReport:
    """Pierce a planar family whose members all meet one of two parallel lines.

    Guarantee floor(3*nu/2) with nu computed exactly at the root.
    """
    if f.dim != 2:
        raise ValueError(f"two-line piercing needs a planar family, got dimension {f.dim}")
    if f.lines is None:
        raise ValueError("family carries no two-line certificate")
    check_cap(f, cap)
    root_nu = nu_exact(f, cap).nu
    tracer = _Tracer()
    points = _two_line_sweep(f, root_nu, cap, tracer, None, 0)
    return _report(points, (3 * root_nu) // 2, root_nu, tracer)


# ---------------------------------------------------------------------------
# planar three-way recursion


def _balanced_triple(n: int) -> tuple[int, int, int]:
    q, r = divmod(n - 2, 3)
    parts = [q + 1] * r + [q] * (3 - r)
    return parts[0], parts[1], parts[2]


def _dp_triple(n: int) -> tuple[int, int, int]:
    best = None
    best_sum = None
    for k in range(n - 1):
        for l in range(n - 1 - k):
            m = n - 2 - k - l
            s = bound_prop3(k) + bound_prop3(l) + bound_prop3(m)
            if best_sum is None or s < best_sum:
                best, best_sum = (k, l, m), s
    return best


def _planar_rec(f: BoxFamily, bound: int, policy: SplitPolicy, cap: int,
                tracer: _Tracer, parent: int | None, depth: int) -> list[Point]:
    if not len(f):
        return []
    while True:
        if bound <= 1:
            tracer.add(parent, op="common-point", dim=2, bound=bound, depth=depth,
                       sizes=(len(f),))
            return [common_point(f)]
        k, l, m = _balanced_triple(bound) if policy is SplitPolicy.BALANCED else _dp_triple(bound)
        a = _threshold_low(f, 0, k, cap)
        if a is None:  # nu(f) <= k: re-enter with the tight bound
            bound = k
            continue
        b = _threshold_high(f, 0, m, cap)
        if b is None:
            bound = m
            continue
        break
    if a > b:
        # Both packing prefixes overrun each other; every cut point
        # between them leaves {r < a} packing <= k and {l > a} packing
        # <= m, so collapse to the single line x = a (the middle part
        # is then empty and the crossing boxes form a one-line family).
        b = a
    parts = split_four(f, 0, a, b)
    node = tracer.add(parent, op="split-four", dim=2, bound=bound, depth=depth,
                      axis=0, lo=a, hi=b,
                      sizes=(len(parts.minus), len(parts.plusminus),
                             len(parts.plus), len(parts.zero)))
    points = _planar_rec(parts.minus, k, policy, cap, tracer, node, depth + 1)
    points += _planar_rec(parts.plusminus, l, policy, cap, tracer, node, depth + 1)
    points += _planar_rec(parts.plus, m, policy, cap, tracer, node, depth + 1)
    zero = BoxFamily(2, parts.zero.boxes, TwoLines(0, a, b))
    points += _two_line_sweep(zero, bound, cap, tracer, node, depth + 1)
    return points


def pierce_planar(f: BoxFamily, policy: SplitPolicy = SplitPolicy.BALANCED,
                  cap: int = DEFAULT_CAP) -> PierceReport:
    """Pierce a planar family by recursive three-way splitting.

    Each level cuts at a left threshold (prefix packs k+1) and a right
    threshold (suffix packs m+1); the three outer parts recurse with
    bounds k, l, m and the boxes crossing either cut form a two-line
    family handled by the sweep.
    """
    if f.dim != 2:
        raise ValueError(f"planar piercing needs a 2-d family, got dimension {f.dim}")
    check_cap(f, cap)
    root_nu = nu_exact(f, cap).nu
    tracer = _Tracer()
    points = _planar_rec(f, root_nu, policy, cap, tracer, None, 0)
    if root_nu == 0:
        guarantee = 0.0
    elif policy is SplitPolicy.BALANCED:
        guarantee = h(root_nu)
    else:
        guarantee = bound_prop3(root_nu)
    return _report(points, guarantee, root_nu, tracer)


# ---------------------------------------------------------------------------
# dimension recursion


def _split_k(n: int, d: int, policy: SplitPolicy) -> int:
    if policy is SplitPolicy.BALANCED:
        return (n - 1) // 2
    best_k = 0
    best_sum = None
    for k in range(n - 1):
        s = bound_prop1(k, d) + bound_prop1(n - k - 1, d)
        if best_sum is None or s < best_sum:
            best_k, best_sum = k, s
    return best_k


def _ddim_rec(f: BoxFamily, d: int, bound: int, policy: SplitPolicy, cap: int,
              tracer: _Tracer, parent: int | None, depth: int) -> list[Point]:
    if d == 1:
        points = _stab_points_1d(f)
        tracer.add(parent, op="sweep-1d", dim=1, bound=bound, depth=depth, sizes=(len(f),))
        return points
    if d == 2:
        return _planar_rec(f, bound, policy, cap, tracer, parent, depth)
    if not len(f):
        return []
    while True:
        if bound <= 1:
            tracer.add(parent, op="common-point", dim=d, bound=bound, depth=depth,
                       sizes=(len(f),))
            return [common_point(f)]
        k = _split_k(bound, d, policy)
        a = _threshold_low(f, 0, k, cap)
        if a is None:
            bound = k
            continue
        break
    minus, zero, plus = split_three(f, 0, a)
    node = tracer.add(parent, op="split-three", dim=d, bound=bound, depth=depth,
                      axis=0, lo=a, sizes=(len(minus), len(zero), len(plus)))
    points = _ddim_rec(minus, d, k, policy, cap, tracer, node, depth + 1)
    projected = project_onto_hyperplane(zero, 0, a)
    inner = _ddim_rec(projected, d - 1, bound, policy, cap, tracer, node, depth + 1)
    points += lift_points(inner, 0, a)
    points += _ddim_rec(plus, d, bound - k - 1, policy, cap, tracer, node, depth + 1)
    return points


def pierce_ddim(f: BoxFamily, policy: SplitPolicy = SplitPolicy.BALANCED,
                cap: int = DEFAULT_CAP) -> PierceReport:
    """Pierce a family of any dimension.

    Dispatches to the interval sweep at d=1 and the planar recursion at
    d=2. For d >= 3, splits on axis 0 at a packing threshold, recurses
    on the outer parts in the same dimension, and pierces the boxes
    crossing the split hyperplane by projecting them one dimension down
    and lifting the resulting points back.
    """
    if f.dim == 1:
        return pierce_intervals_1d(f)
    if f.dim == 2:
        return pierce_planar(f, policy, cap)
    check_cap(f, cap)
    root_nu = nu_exact(f, cap).nu
    tracer = _Tracer()
    points = _ddim_rec(f, f.dim, root_nu, policy, cap, tracer, None, 0)
    if root_nu == 0:
        guarantee = 0.0
    elif policy is SplitPolicy.BALANCED:
        guarantee = bound_lemma1(root_nu, f.dim)
    else:
        guarantee = bound_prop1(root_nu, f.dim)
    return _report(points, guarantee, root_nu, tracer)
