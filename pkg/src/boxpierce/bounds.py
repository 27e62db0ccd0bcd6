"""Upper-bound recurrences for the worst-case piercing number.

Let F(n, d) denote the largest piercing number over d-dimensional box
families with packing number n. Known bases: F(0, d) = 0, F(1, d) = 1,
F(n, 1) = n, and F(2, 2) = 3. This module evaluates the upper-bound
rules exactly:

  prop1      F(n,d) <= min_{0<=k<=n-2} {F(k,d) + F(n-k-1,d)} + F(n,d-1)
             (hyperplane split: k+1 disjoint boxes left of the split
             force the right side down to n-k-1).
  prop3      F(n,2) <= min_{k+l+m=n-2} {F(k,2)+F(l,2)+F(m,2)} + floor(3n/2)
             (planar three-way split; the middle strip is pierced by a
             two-line sweep worth floor(3n/2) points).
  lemma1     F(n,d) <= n + log2(n) * F(n,d-1) (balanced halving,
             real-valued; d=2 uses F(n,1)=n, d=3 uses the prop3 table).
  hadwiger2  F(n,2) <= n(n-1)/2. Stated without small-n qualification
             although it contradicts F(2,2)=3 at n=2 (and known lower
             bounds at n=3); exposed verbatim, see README.
  h          h(n) = n*log_{9^(1/3)}(n) + n, a closed form dominating the
             prop3 table.
  bestknown  pointwise minimum of the applicable integer rules with the
             exact small bases injected; the d-1 column feeding its own
             pairwise-split recurrence at d >= 3.

Integer rules are computed in exact integer arithmetic; real-valued
rules in floating point, compared against integers with a 1e-9 absolute
tolerance where an exact rational threshold is unavailable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

_LN9 = math.log(9.0)

#: log base 9^(1/3) of 2, the per-level growth constant of the combined
#: recursion; its reciprocal ~1.0566 is the improvement factor over the
#: plain n*log2(n)^(d-1) shape.
LOG_CBRT9_OF_2 = 3.0 * math.log(2.0) / _LN9


class BoundRule(str, Enum):
    PROP1 = "prop1"
    PROP3 = "prop3"
    LEMMA1 = "lemma1"
    HADWIGER2 = "hadwiger2"
    H = "h"
    BEST_KNOWN = "bestknown"


#: Rules defined only in the plane.
PLANAR_ONLY = frozenset({BoundRule.PROP3, BoundRule.HADWIGER2, BoundRule.H})

#: Exact small values quoted for reference; not used as DP bases because
#: their proofs come from constructions this package does not contain.
KNOWN_EXACT = {(2, 2): 3, (2, 3): 4, (2, 4): 5}


def log_base_cbrt9(x: float) -> float:
    return 3.0 * math.log(x) / _LN9


def h(n: int) -> float:
    """The planar closed-form bound n * log_{9^(1/3)}(n) + n."""
    if n < 1:
        raise ValueError(f"h(n) needs n >= 1, got {n}")
    return n * log_base_cbrt9(n) + n


def asymptotic_constant() -> float:
    """log_{9^(1/3)}(2) ~ 0.946395, the leading constant at fixed d."""
    return LOG_CBRT9_OF_2


def _check_n(n: int) -> None:
    if type(n) is not int or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")


# Lazily extended DP tables; values are exact ints throughout.
_prop3: list[int] = [0, 1]
_prop3_pairs: list[int] = [0, 1]  # pairs[s] = min_{i+j=s} table[i]+table[j]
_prop1: dict[int, list[int]] = {}
_best: dict[int, list[int]] = {}


def _pair_min(table: list[int], s: int) -> int:
    return min(table[i] + table[s - i] for i in range(s // 2 + 1))


def bound_prop3(n: int) -> int:
    """Planar three-way-split DP value at n (exact integer)."""
    _check_n(n)
    while len(_prop3) <= n:
        m = len(_prop3)
        s = m - 2
        while len(_prop3_pairs) <= s:
            _prop3_pairs.append(_pair_min(_prop3, len(_prop3_pairs)))
        inner = min(_prop3[k] + _prop3_pairs[s - k] for k in range(s + 1))
        _prop3.append(inner + (3 * m) // 2)
    return _prop3[n]


def bound_prop1(n: int, d: int) -> int:
    """Pairwise-split DP value at (n, d), self-contained per dimension.

    The d-1 column is this same rule's table (F(n,1) = n at the bottom),
    which is exactly what the same-dimension recursion of the
    dimension-reducing piercing algorithm achieves; see pierce_ddim.
    """
    _check_n(n)
    if type(d) is not int or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")
    if d == 1:
        return n
    table = _prop1.setdefault(d, [0, 1])
    while len(table) <= n:
        m = len(table)
        inner = min(table[k] + table[m - 1 - k] for k in range(m - 1))
        table.append(inner + bound_prop1(m, d - 1))
    return table[n]


def bound_lemma1(n: int, d: int) -> float:
    """Balanced-halving bound n + log2(n) * base(n, d-1), real-valued.

    base(n, 1) = n, base(n, 2) = bound_prop3(n), and deeper columns feed
    the rule back into itself.
    """
    if type(n) is not int or n < 1:
        raise ValueError(f"bound_lemma1 needs n >= 1, got {n!r}")
    if type(d) is not int or d < 2:
        raise ValueError(f"bound_lemma1 needs d >= 2, got {d!r}")
    if n == 1:
        return 1.0
    if d == 2:
        base: float = n
    elif d == 3:
        base = bound_prop3(n)
    else:
        base = bound_lemma1(n, d - 1)
    return n + math.log2(n) * base


def bound_hadwiger2(n: int) -> int:
    """The quadratic planar bound n(n-1)/2, as stated.

    Only n=1 is patched (F(1,2)=1 dominates the formula's 0). At n=2 the
    formula yields 1, below the exact value F(2,2)=3; the rule is
    reported verbatim anyway and is meaningful only from n >= 4.
    """
    if type(n) is not int or n < 1:
        raise ValueError(f"bound_hadwiger2 needs n >= 1, got {n!r}")
    if n == 1:
        return 1
    return n * (n - 1) // 2


def bound_best_known(n: int, d: int) -> int:
    """Best integer upper bound obtained by combining the rules.

    d=2 column: exact bases {0, 1, 3}, then the pointwise minimum of
    prop3, prop1 and hadwiger2 (minimum of monotone tables, hence
    monotone). Higher dimensions run the pairwise-split recurrence over
    this combined column.
    """
    _check_n(n)
    if type(d) is not int or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")
    if d == 1:
        return n
    if d == 2:
        if n <= 2:
            return (0, 1, 3)[n]
        return min(bound_prop3(n), bound_prop1(n, 2), bound_hadwiger2(n))
    table = _best.setdefault(d, [0, 1])
    while len(table) <= n:
        m = len(table)
        inner = min(table[k] + table[m - 1 - k] for k in range(m - 1))
        table.append(inner + bound_best_known(m, d - 1))
    return table[n]


@dataclass(frozen=True)
class BoundTable:
    """Evaluated cells of one rule: values maps (n, d) to an int or float."""

    rule: BoundRule
    max_n: int
    max_d: int
    values: dict[tuple[int, int], int | float]


def _cells(rule: BoundRule, max_n: int, max_d: int):
    if rule in PLANAR_ONLY:
        if max_d < 2:
            raise ValueError(f"rule {rule.value} applies only at d=2, got max_d={max_d}")
        dims = [2]
    elif rule is BoundRule.LEMMA1:
        if max_d < 2:
            raise ValueError(f"rule {rule.value} needs max_d >= 2, got max_d={max_d}")
        dims = range(2, max_d + 1)
    else:
        dims = range(1, max_d + 1)
    n_lo = 1 if rule in (BoundRule.LEMMA1, BoundRule.HADWIGER2, BoundRule.H) else 0
    for d in dims:
        for n in range(n_lo, max_n + 1):
            yield n, d


def build_table(rule: BoundRule, max_n: int, max_d: int = 2) -> BoundTable:
    """Evaluate one rule over its cells up to (max_n, max_d)."""
    rule = BoundRule(rule)
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    evaluate = {
        BoundRule.PROP1: lambda n, d: bound_prop1(n, d),
        BoundRule.PROP3: lambda n, d: bound_prop3(n),
        BoundRule.LEMMA1: lambda n, d: bound_lemma1(n, d),
        BoundRule.HADWIGER2: lambda n, d: bound_hadwiger2(n),
        BoundRule.H: lambda n, d: h(n),
        BoundRule.BEST_KNOWN: lambda n, d: bound_best_known(n, d),
    }[rule]
    values = {(n, d): evaluate(n, d) for n, d in _cells(rule, max_n, max_d)}
    return BoundTable(rule, max_n, max_d, values)


def table_to_csv(table: BoundTable) -> str:
    """Render as `rule,n,d,value` rows: integers unpadded, reals with 6 decimals."""
    lines = ["rule,n,d,value"]
    for (n, d) in sorted(table.values, key=lambda c: (c[1], c[0])):
        v = table.values[(n, d)]
        text = str(v) if isinstance(v, int) else f"{v:.6f}"
        lines.append(f"{table.rule.value},{n},{d},{text}")
    return "\n".join(lines) + "\n"
