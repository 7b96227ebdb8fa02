"""Outage probability under independent edge failures.

Three independent routes to the same number are kept side by side on
purpose: inclusion-exclusion over path survival events, inclusion-
exclusion over minimal cut-set failure events, and the direct sum of
state probabilities over all cut-sets.  Agreement between them is the
main correctness check for the enumeration layer.

All routes are generic in the probability argument: a float gives a
float, a Fraction gives an exact rational, and a Poly gives the outage
polynomial itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import CutFamily, PathSet
from .errors import CutBudgetExceeded, InvalidCount, PathBudgetExceeded
from .polynomial import Poly

DEFAULT_TERM_BUDGET = 1 << 20

__all__ = [
    "DEFAULT_TERM_BUDGET",
    "OutageBounds",
    "AsymptoticSummary",
    "cut_enumerator",
    "outage_polynomial",
    "outage_by_paths",
    "outage_by_cuts",
    "outage_by_reliability_sum",
    "outage_bounds",
    "asymptotic_summary",
]


def _edge_values(p, n: int) -> list:
    """Normalize a scalar or per-edge sequence to a list of n values."""
    if isinstance(p, (list, tuple)):
        if len(p) != n:
            raise InvalidCount(f"expected {n} edge probabilities, got {len(p)}")
        return list(p)
    return [p] * n


def _union_probability(masks, factors, budget: int, budget_error):
    """P[at least one event] by inclusion-exclusion over event subsets.

    Event r occurs when every edge in masks[r] takes its per-edge factor
    (independent edges), so a subset of events contributes the product
    over the union of its masks.  Products are cached by union mask;
    distinct unions are usually far fewer than subsets.
    """
    g = len(masks)
    if (1 << g) > budget:
        raise budget_error(f"inclusion-exclusion over {g} events exceeds {budget} terms")
    total = 0
    unions = [0] * (1 << g)
    prod_cache = {0: 1}
    for s in range(1, 1 << g):
        low = s & -s
        u = unions[s ^ low] | masks[low.bit_length() - 1]
        unions[s] = u
        prod = prod_cache.get(u)
        if prod is None:
            prod = 1
            mm = u
            while mm:
                prod = prod * factors[(mm & -mm).bit_length() - 1]
                mm &= mm - 1
            prod_cache[u] = prod
        if s.bit_count() & 1:
            total = total + prod
        else:
            total = total - prod
    return total


def cut_enumerator(cuts: CutFamily) -> Poly:
    """Enumerator A(x) with A_i = number of cut-sets of size i."""
    counts = [0] * (cuts.edge_count + 1)
    for c in cuts.all_cuts:
        counts[c.bit_count()] += 1
    return Poly(counts)


def outage_polynomial(cuts: CutFamily) -> Poly:
    """Exact outage polynomial O(p) = sum_i A_i p^i (1-p)^(n-i)."""
    n = cuts.edge_count
    enum = cut_enumerator(cuts)
    p, q = Poly.x(), Poly.one_minus_x()
    total = Poly.zero()
    for i in range(n + 1):
        a = enum.coefficient(i)
        if a:
            total = total + a * p**i * q ** (n - i)
    return total


def outage_by_paths(paths: PathSet, p, *, term_budget: int = DEFAULT_TERM_BUDGET):
    """Outage via inclusion-exclusion on path survival events.

    The terminal is reachable when some path has all its edges working,
    so outage = 1 - P[union of path-up events].
    """
    survive = [1 - v for v in _edge_values(p, paths.edge_count)]
    up = _union_probability(paths.masks, survive, term_budget, PathBudgetExceeded)
    return 1 - up


def outage_by_cuts(cuts: CutFamily, p, *, term_budget: int = DEFAULT_TERM_BUDGET):
    """Outage via inclusion-exclusion on minimal cut-set failure events.

    The terminal is unreachable exactly when some minimal cut-set has
    all its edges failed.
    """
    fail = _edge_values(p, cuts.edge_count)
    return _union_probability(cuts.minimal_cuts, fail, term_budget, CutBudgetExceeded)


def outage_by_reliability_sum(cuts: CutFamily, p):
    """Outage as the direct sum of state probabilities over all cut-sets."""
    n = cuts.edge_count
    fail = _edge_values(p, n)
    survive = [1 - v for v in fail]
    total = 0
    for c in cuts.all_cuts:
        prod = 1
        for j in range(n):
            prod = prod * (fail[j] if (c >> j) & 1 else survive[j])
        total = total + prod
    return total


@dataclass(frozen=True)
class OutageBounds:
    """Closed-form envelopes around the exact outage at one probability.

    upper_enumerator drops every survival factor (A(p) evaluated at p),
    upper_union is the union bound over minimal cut-sets, and lower
    keeps only the minimum-size term of the exact sum.
    """

    lower: object
    upper_enumerator: object
    upper_union: object


def outage_bounds(cuts: CutFamily, p) -> OutageBounds:
    n = cuts.edge_count
    enum = cut_enumerator(cuts)
    a_m = enum.coefficient(cuts.m)
    lower = a_m * p**cuts.m * (1 - p) ** (n - cuts.m)
    upper_enum = enum(p)
    upper_union = 0
    for c in cuts.minimal_cuts:
        upper_union = upper_union + p ** c.bit_count()
    return OutageBounds(lower, upper_enum, upper_union)


@dataclass(frozen=True)
class AsymptoticSummary:
    """Small-p behaviour O(p) ~ coding_gain * p^diversity.

    diversity is the minimum cut-set size; coding_gain counts the
    minimum cut-sets, i.e. the leading enumerator coefficient.
    """

    diversity: int
    coding_gain: int


def asymptotic_summary(cuts: CutFamily) -> AsymptoticSummary:
    return AsymptoticSummary(diversity=cuts.m, coding_gain=len(cuts.minimum_cuts))
