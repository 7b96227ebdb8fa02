import numpy as np
import pytest

from conftest import bfs_connected, disjoint_path_capacity, random_cases

from netoutage import build_network
from netoutage import kernels
from netoutage.errors import InternalError
from netoutage.enumeration import enumerate_cutsets

BACKENDS = ["numpy", "numba"]
CASES = random_cases(8, seed=47)


@pytest.fixture(params=BACKENDS)
def backend(request):
    name = request.param
    if name == "numba":
        pytest.importorskip("numba")
    prev = kernels.use_backend(name)
    yield name
    kernels.use_backend(prev)


def test_backend_switch_round_trips():
    original = kernels.active_backend()
    prev = kernels.use_backend("numpy")
    assert kernels.active_backend() == "numpy"
    kernels.use_backend(prev)
    assert kernels.active_backend() == original


def test_invalid_backend_rejected():
    with pytest.raises(ValueError):
        kernels.use_backend("cuda")


def test_connectivity_matches_oracle(backend, nets):
    for net in nets.values():
        conn = kernels.state_connectivity(net)
        n = net.edge_count
        assert conn.shape == (1 << n,)
        for alive in range(1 << n):
            expected = bfs_connected(
                net.node_count, list(net.edges), net.source, net.terminal, alive
            )
            assert bool(conn[alive]) == expected


def test_capacities_match_oracle(backend):
    for (nv, edges, s, t), net in CASES[:4]:
        cuts = enumerate_cutsets(net)
        caps = kernels.state_capacities(net, cut_masks=cuts.minimal_cuts)
        n = len(edges)
        for alive in range(1 << n):
            assert caps[alive] == disjoint_path_capacity(nv, edges, s, t, alive)


def test_trial_capacities_match_state_capacities(backend):
    rng = np.random.default_rng(12)
    for _, net in CASES[:4]:
        cuts = enumerate_cutsets(net)
        n = net.edge_count
        alive = rng.random((500, n)) < 0.6
        caps = kernels.trial_capacities(net, alive, cut_masks=cuts.minimal_cuts)
        table = kernels.state_capacities(net, cut_masks=cuts.minimal_cuts)
        packed = (alive.astype(np.uint64) << np.arange(n, dtype=np.uint64)).sum(axis=1)
        assert np.array_equal(caps, table[packed])


def test_backends_agree_exactly():
    pytest.importorskip("numba")
    rng = np.random.default_rng(99)
    for _, net in CASES:
        cuts = enumerate_cutsets(net)
        alive = rng.random((300, net.edge_count)) < 0.5
        results = {}
        for name in BACKENDS:
            prev = kernels.use_backend(name)
            try:
                results[name] = (
                    kernels.state_connectivity(net),
                    kernels.state_capacities(net, cut_masks=cuts.minimal_cuts),
                    kernels.trial_capacities(net, alive, cut_masks=cuts.minimal_cuts),
                )
            finally:
                kernels.use_backend(prev)
        for a, b in zip(results["numpy"], results["numba"]):
            assert np.array_equal(a, b)


def test_numpy_capacity_requires_masks():
    prev = kernels.use_backend("numpy")
    try:
        net = build_network(2, [(0, 1)], 0, 1)
        with pytest.raises(InternalError):
            kernels.state_capacities(net, cut_masks=None)
    finally:
        kernels.use_backend(prev)


def test_connectivity_spans_chunks(backend):
    # 2^17 states crosses the numpy chunk boundary
    net = build_network(2, [(0, 1)] * 17, 0, 1)
    conn = kernels.state_connectivity(net)
    assert conn.shape == (1 << 17,)
    assert not conn[0]
    assert conn[1] and conn[1 << 16] and conn[(1 << 17) - 1]
    assert int(conn.sum()) == (1 << 17) - 1  # any surviving edge connects


def test_warmup_runs():
    kernels.warmup()
