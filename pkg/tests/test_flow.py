import random

import pytest

from conftest import disjoint_path_capacity, random_cases

from netoutage import build_network
from netoutage.flow import max_flow

CASES = random_cases(30, seed=7)


def test_series_chain():
    net = build_network(4, [(0, 1), (1, 2), (2, 3)], 0, 3)
    assert max_flow(net) == 1


def test_parallel_edges():
    net = build_network(2, [(0, 1)] * 5, 0, 1)
    assert max_flow(net) == 5


def test_alive_mask_restricts_flow():
    net = build_network(2, [(0, 1)] * 3, 0, 1)
    assert max_flow(net, alive_mask=0b101) == 2
    assert max_flow(net, alive_mask=0b000) == 0


def test_crossed_ladder():
    # two rails plus a crossing edge; the crossing must not add capacity
    net = build_network(4, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)], 0, 3)
    assert max_flow(net) == 2


@pytest.mark.parametrize("case_idx", range(len(CASES)))
def test_matches_disjoint_path_search(case_idx):
    (nv, edges, s, t), net = CASES[case_idx]
    full = (1 << len(edges)) - 1
    rng = random.Random(case_idx)
    masks = [full, 0] + [rng.randrange(1 << len(edges)) for _ in range(6)]
    for alive in masks:
        assert max_flow(net, alive_mask=alive) == disjoint_path_capacity(
            nv, edges, s, t, alive
        )
