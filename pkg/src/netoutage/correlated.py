"""Outage under block-correlated edge failures.

The edge set is partitioned into disjoint blocks.  Each block tosses a
Bernoulli(rho) switch: on 1 every edge in the block shares a single
fail/survive draw, on 0 the edges fail independently.  Block switches
are mutually independent, so a pattern probability factors over blocks,
and the outage is the sum of pattern probabilities over all cut-sets.

rho = 0, or a partition into singletons, recovers the independent case.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import CutFamily
from .errors import InvalidCount, ParseError, PartitionMismatch
from .network import indices_from_mask, mask_from_indices
from .polynomial import Poly2

__all__ = [
    "CorrelationPartition",
    "partition_from_json",
    "block_outage_weight",
    "block_outage_weight_poly",
    "correlated_outage",
    "correlated_outage_poly",
]


@dataclass(frozen=True)
class CorrelationPartition:
    """Disjoint nonempty edge blocks covering all edge_count edges."""

    blocks: tuple[int, ...]
    edge_count: int

    def __post_init__(self):
        union = 0
        for b in self.blocks:
            if b == 0:
                raise PartitionMismatch("empty block in correlation partition")
            if union & b:
                raise PartitionMismatch("correlation partition blocks overlap")
            union |= b
        if union != (1 << self.edge_count) - 1:
            missing = indices_from_mask(((1 << self.edge_count) - 1) ^ union)
            raise PartitionMismatch(
                f"correlation partition leaves edges {missing} uncovered"
            )

    @classmethod
    def from_lists(cls, blocks, edge_count: int) -> "CorrelationPartition":
        return cls(tuple(mask_from_indices(b) for b in blocks), edge_count)

    @classmethod
    def singletons(cls, edge_count: int) -> "CorrelationPartition":
        return cls(tuple(1 << j for j in range(edge_count)), edge_count)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_index_lists(self) -> list[list[int]]:
        return [indices_from_mask(b) for b in self.blocks]


def partition_from_json(text: str, edge_count: int):
    """Parse a partition file: {"blocks": [[edge indices], ...], "rho": <optional>}.

    Returns (partition, rho) with rho None when the file omits it.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in partition file: {exc}") from exc
    if not isinstance(doc, dict) or "blocks" not in doc:
        raise ParseError('partition file must be an object with a "blocks" list')
    blocks = doc["blocks"]
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise ParseError('"blocks" must be a list of edge index lists')
    for b in blocks:
        for j in b:
            if not isinstance(j, int) or isinstance(j, bool) or not 0 <= j < edge_count:
                raise ParseError(f"edge index {j!r} out of range in partition block")
    rho = doc.get("rho")
    if rho is not None and not isinstance(rho, (int, float)):
        raise ParseError('"rho" must be a number')
    if rho is not None and not 0 <= rho <= 1:
        raise ParseError(f"rho must lie in [0, 1], got {rho}")
    return CorrelationPartition.from_lists(blocks, edge_count), rho


def block_outage_weight(x: int, y: int, p, rho):
    """Probability that exactly a fixed y-subset of an x-edge block fails.

    Fully failed and fully surviving blocks pick up the shared-draw term;
    mixed patterns require the independent draw.
    """
    if not 0 <= y <= x:
        raise InvalidCount(f"outage count {y} outside block size {x}")
    if y == 0:
        return rho * (1 - p) + (1 - rho) * (1 - p) ** x
    if y == x:
        return rho * p + (1 - rho) * p**x
    return (1 - rho) * p**y * (1 - p) ** (x - y)


def block_outage_weight_poly(x: int, y: int) -> Poly2:
    """Symbolic block pattern weight in the variables p and rho."""
    return block_outage_weight(x, y, Poly2.p(), Poly2.rho())


def correlated_outage(cuts: CutFamily, partition: CorrelationPartition, p, rho):
    """Outage probability with block-correlated failures.

    Sums, over every cut-set, the probability that exactly the cut fails:
    a product of per-block pattern weights.  Weights are cached by the
    (block size, failed count) pair.
    """
    if partition.edge_count != cuts.edge_count:
        raise PartitionMismatch(
            f"partition covers {partition.edge_count} edges, network has {cuts.edge_count}"
        )
    sizes = [b.bit_count() for b in partition.blocks]
    cache: dict[tuple[int, int], object] = {}
    total = 0
    for c in cuts.all_cuts:
        prod = 1
        for b, x in zip(partition.blocks, sizes):
            y = (c & b).bit_count()
            w = cache.get((x, y))
            if w is None:
                w = block_outage_weight(x, y, p, rho)
                cache[x, y] = w
            prod = prod * w
        total = total + prod
    return total


def correlated_outage_poly(cuts: CutFamily, partition: CorrelationPartition) -> Poly2:
    """Exact bivariate outage polynomial in p and rho."""
    out = correlated_outage(cuts, partition, Poly2.p(), Poly2.rho())
    if isinstance(out, int):
        return Poly2.constant(Fraction(out))
    return out
