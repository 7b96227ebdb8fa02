import random
from fractions import Fraction

import pytest

from conftest import bfs_connected, random_cases

from netoutage import (
    CorrelationPartition,
    InvalidCount,
    PartitionMismatch,
    Poly,
    Poly2,
    block_outage_weight,
    block_outage_weight_poly,
    correlated_outage,
    correlated_outage_poly,
    enumerate_cutsets,
    outage_polynomial,
    partition_from_json,
)
from netoutage.errors import ParseError

CASES = random_cases(10, seed=23)


def test_partition_validation():
    CorrelationPartition.from_lists([[0, 1], [2]], 3)
    with pytest.raises(PartitionMismatch):
        CorrelationPartition.from_lists([[0, 1]], 3)  # edge 2 uncovered
    with pytest.raises(PartitionMismatch):
        CorrelationPartition.from_lists([[0, 1], [1, 2]], 3)  # overlap
    with pytest.raises(PartitionMismatch):
        CorrelationPartition.from_lists([[0, 1, 2], []], 3)  # empty block


def test_partition_json():
    part, rho = partition_from_json('{"rho": 0.5, "blocks": [[0, 1], [2, 3]]}', 4)
    assert part.blocks == (0b0011, 0b1100)
    assert rho == 0.5
    part2, rho2 = partition_from_json('{"blocks": [[0], [1], [2], [3]]}', 4)
    assert rho2 is None
    assert part2 == CorrelationPartition.singletons(4)
    with pytest.raises(ParseError):
        partition_from_json('{"blocks": [[0, 9]]}', 4)
    with pytest.raises(ParseError):
        partition_from_json('{"blocks": [[0]], "rho": 1.5}', 1)
    with pytest.raises(ParseError):
        partition_from_json("[1, 2]", 4)


def test_block_weight_special_cases():
    p, rho = Fraction(1, 4), Fraction(1, 3)
    # one-edge blocks behave independently regardless of rho
    assert block_outage_weight(1, 1, p, rho) == p
    assert block_outage_weight(1, 0, p, rho) == 1 - p
    # weights over all failure patterns sum to one
    x = 3
    total = sum(
        block_outage_weight(x, y, p, rho) * _choose(x, y) for y in range(x + 1)
    )
    assert total == 1
    with pytest.raises(InvalidCount):
        block_outage_weight(2, 3, p, rho)


def _choose(x, y):
    out = 1
    for i in range(y):
        out = out * (x - i) // (i + 1)
    return out


def test_block_weight_poly_matches_numeric():
    p, rho = Fraction(2, 7), Fraction(3, 5)
    for x in range(1, 4):
        for y in range(x + 1):
            assert block_outage_weight_poly(x, y)(p, rho) == block_outage_weight(
                x, y, p, rho
            )


def test_n2_closed_form(nets):
    cuts = enumerate_cutsets(nets["n2"])
    part = CorrelationPartition.from_lists([[0, 1], [2, 3]], 4)
    got = correlated_outage_poly(cuts, part)
    p, r = Poly2.p(), Poly2.rho()
    a = r * p + p**2 - r * p**2
    assert got == a * (2 - a)
    # rho endpoints collapse to the published univariate polynomials
    assert got.substitute_rho(0) == Poly([0, 0, 2, 0, -1])  # 2p^2 - p^4
    assert got.substitute_rho(1) == Poly([0, 2, -1])  # 2p - p^2


def test_rho_zero_matches_independent(nets):
    for net in nets.values():
        cuts = enumerate_cutsets(net)
        part = CorrelationPartition.singletons(net.edge_count)
        poly = correlated_outage_poly(cuts, part)
        assert poly.substitute_rho(Fraction(1, 2)) == outage_polynomial(cuts)


def test_numeric_equals_symbolic(nets):
    cuts = enumerate_cutsets(nets["n4"])
    part = CorrelationPartition.from_lists([[0, 1], [2, 3], [4, 5]], 6)
    poly = correlated_outage_poly(cuts, part)
    for p, rho in [(Fraction(1, 10), Fraction(1, 2)), (Fraction(3, 4), Fraction(9, 10))]:
        assert correlated_outage(cuts, part, p, rho) == poly(p, rho)


def test_partition_network_size_mismatch(nets):
    cuts = enumerate_cutsets(nets["n1"])
    part = CorrelationPartition.from_lists([[0, 1], [2, 3]], 4)
    with pytest.raises(PartitionMismatch):
        correlated_outage(cuts, part, Fraction(1, 2), Fraction(1, 2))


def _oracle_correlated(nv, edges, s, t, blocks, p, rho):
    """State sum with block weights, straight from the model definition."""
    n = len(edges)
    total = 0
    for alive in range(1 << n):
        if bfs_connected(nv, edges, s, t, alive):
            continue
        failed = ((1 << n) - 1) ^ alive
        weight = 1
        for bmask in blocks:
            x = bmask.bit_count()
            y = (failed & bmask).bit_count()
            weight = weight * block_outage_weight(x, y, p, rho)
        total = total + weight
    return total


@pytest.mark.parametrize("case_idx", range(len(CASES)))
def test_matches_state_sum_oracle(case_idx):
    (nv, edges, s, t), net = CASES[case_idx]
    cuts = enumerate_cutsets(net)
    rng = random.Random(4000 + case_idx)
    # random partition: shuffle edges, split into contiguous chunks
    order = list(range(len(edges)))
    rng.shuffle(order)
    blocks, i = [], 0
    while i < len(order):
        size = min(rng.randint(1, 3), len(order) - i)
        blocks.append(order[i : i + size])
        i += size
    part = CorrelationPartition.from_lists(blocks, len(edges))
    p, rho = Fraction(rng.randint(1, 9), 10), Fraction(rng.randint(0, 10), 10)
    expected = _oracle_correlated(nv, edges, s, t, part.blocks, p, rho)
    assert correlated_outage(cuts, part, p, rho) == expected
