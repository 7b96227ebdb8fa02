"""Capacity distribution polynomials and ergodic capacity.

The instantaneous capacity of a surviving edge set is its number of
edge-disjoint source-terminal paths, equal to the smallest number of
survivors any minimal cut-set keeps.  C_c(p) is the probability that
the capacity equals c; the ergodic capacity is sum c * C_c(p).

Two routes are provided: a general one that scans all 2^n edge states,
and a product-form shortcut valid when the minimal cut-sets are
pairwise disjoint (then survivor counts per cut are independent).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .enumeration import DEFAULT_STATE_BUDGET, CutFamily, enumerate_cutsets
from .errors import DisjointCutsRequired, InternalError, TooManyEdges
from .flow import max_flow
from .network import Network
from .polynomial import Poly

__all__ = [
    "CapacitySpectrum",
    "instantaneous_capacity",
    "capacity_spectrum",
    "capacity_spectrum_disjoint",
    "survivor_tail_poly",
]


def instantaneous_capacity(net: Network, alive_mask: int) -> int:
    """Edge-disjoint path count of the surviving subgraph (its max-flow value)."""
    return max_flow(net, alive_mask)


@dataclass(frozen=True)
class CapacitySpectrum:
    """Exact distribution of the instantaneous capacity.

    polynomials[c] is C_c(p) for c = 0..m; they sum to 1.  C_0 is the
    outage polynomial.
    """

    polynomials: tuple[Poly, ...]
    ergodic: Poly

    @property
    def m(self) -> int:
        return len(self.polynomials) - 1

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "C": [poly.coeff_strings() for poly in self.polynomials],
            "ergodic": self.ergodic.coeff_strings(),
        }


def _assemble(counts: np.ndarray, n: int) -> CapacitySpectrum:
    """Turn a (m+1, n+1) tally of states per (capacity, failed edges) into polynomials."""
    p, q = Poly.x(), Poly.one_minus_x()
    basis = [p**f * q ** (n - f) for f in range(n + 1)]
    polys = []
    for c in range(counts.shape[0]):
        total = Poly.zero()
        for f in range(n + 1):
            w = int(counts[c, f])
            if w:
                total = total + w * basis[f]
        polys.append(total)
    check = Poly.zero()
    ergodic = Poly.zero()
    for c, poly in enumerate(polys):
        check = check + poly
        ergodic = ergodic + c * poly
    if check != Poly.one():
        raise InternalError("capacity distribution does not sum to one")
    return CapacitySpectrum(tuple(polys), ergodic)


def capacity_spectrum(
    net: Network,
    cuts: CutFamily | None = None,
    *,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> CapacitySpectrum:
    """Exact capacity distribution by scanning all 2^n edge states."""
    n = net.edge_count
    if (1 << n) > state_budget:
        raise TooManyEdges(
            f"2^{n} edge states exceed the state budget of {state_budget}"
        )
    masks = None
    if cuts is not None:
        masks = cuts.minimal_cuts
    elif kernels.needs_cut_masks():
        masks = enumerate_cutsets(net, state_budget=state_budget).minimal_cuts
    caps = kernels.state_capacities(net, cut_masks=masks)
    m = int(caps[-1])
    if m != max_flow(net):
        raise InternalError("state scan and max-flow disagree on the top capacity")
    states = np.arange(1 << n, dtype=np.uint64)
    failed = n - np.bitwise_count(states).astype(np.int64)
    combined = caps.astype(np.int64) * (n + 1) + failed
    tally = np.bincount(combined, minlength=(m + 1) * (n + 1)).reshape(m + 1, n + 1)
    return _assemble(tally, n)


def survivor_tail_poly(at_least: int, cut_size: int) -> Poly:
    """P[at least `at_least` of `cut_size` independently failing edges survive]."""
    p, q = Poly.x(), Poly.one_minus_x()
    total = Poly.zero()
    for j in range(at_least, cut_size + 1):
        total = total + math.comb(cut_size, j) * q**j * p ** (cut_size - j)
    return total


def capacity_spectrum_disjoint(minimal_cuts) -> CapacitySpectrum:
    """Capacity distribution in product form for pairwise-disjoint minimal cut-sets.

    With disjoint cut-sets the survivor counts are independent, so
    P[capacity >= i] is a product of per-cut tail probabilities.
    """
    cut_list = list(minimal_cuts)
    seen = 0
    for c in cut_list:
        if seen & c:
            raise DisjointCutsRequired("minimal cut-sets overlap; use the state scan")
        seen |= c
    sizes = [c.bit_count() for c in cut_list]
    m = min(sizes)
    tails = [Poly.one()]
    for i in range(1, m + 1):
        prod = Poly.one()
        for size in sizes:
            prod = prod * survivor_tail_poly(i, size)
        tails.append(prod)
    tails.append(Poly.zero())
    polys = tuple(tails[i] - tails[i + 1] for i in range(m + 1))
    ergodic = Poly.zero()
    for i, poly in enumerate(polys):
        ergodic = ergodic + i * poly
    return CapacitySpectrum(polys, ergodic)
