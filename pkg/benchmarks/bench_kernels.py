"""Compare the numba and numpy kernel backends.

Times the kernel entry points on a 20-edge layered network (2^20 edge
states), a 2M-trial Monte Carlo run, and a 1M-trial run on a 40-edge
network that only the flow-based backend can handle, once per backend.

Usage: python benchmarks/bench_kernels.py
"""

import time

from netoutage import (
    BudgetExceeded,
    SimConfig,
    build_network,
    enumerate_cutsets,
    kernels,
    simulate,
)


def layered_network():
    """Two stages of parallel banks with cross links, 20 edges."""
    edges = (
        [(0, 1)] * 3
        + [(0, 2)] * 3
        + [(1, 3)] * 2
        + [(2, 3)] * 2
        + [(1, 4)] * 2
        + [(2, 4)] * 2
        + [(3, 5)] * 3
        + [(4, 5)] * 3
    )
    return build_network(6, edges, 0, 5)


def ladder_network(rungs=10, width=4):
    """Chain of parallel banks, rungs*width edges; too big to enumerate."""
    edges = []
    for i in range(rungs):
        edges += [(i, i + 1)] * width
    return build_network(rungs + 1, edges, 0, rungs)


def timed(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    net = layered_network()
    cuts = enumerate_cutsets(net)
    mc_net = build_network(5, [(0, 2), (0, 1), (1, 3), (2, 3), (2, 4), (3, 4)], 0, 4)
    mc_cuts = enumerate_cutsets(mc_net)
    cfg = SimConfig(trials=2_000_000, seed=1, p=0.3)
    big_net = ladder_network()
    big_cfg = SimConfig(trials=1_000_000, seed=3, p=0.3)

    workloads = {
        "connectivity 2^20 states": lambda: kernels.state_connectivity(net),
        "capacities 2^20 states": lambda: kernels.state_capacities(
            net, cut_masks=cuts.minimal_cuts
        ),
        "monte carlo 2M trials": lambda: simulate(mc_net, cfg, mc_cuts),
        "monte carlo 1M trials, 40 edges": lambda: simulate(big_net, big_cfg),
    }

    results = {}
    for backend in ("numpy", "numba"):
        prev = kernels.use_backend(backend)
        try:
            kernels.warmup()
            for name, fn in workloads.items():
                try:
                    results[backend, name] = timed(fn)
                except BudgetExceeded:
                    results[backend, name] = None
        finally:
            kernels.use_backend(prev)

    width = max(len(name) for name in workloads)
    print(f"{'workload':<{width}}  {'numpy':>9}  {'numba':>9}  {'speedup':>7}")
    for name in workloads:
        tn = results["numpy", name]
        tb = results["numba", name]
        col_n = f"{tn:>8.3f}s" if tn is not None else f"{'n/a':>9}"
        ratio = f"{tn / tb:>6.1f}x" if tn is not None else f"{'':>7}"
        print(f"{name:<{width}}  {col_n}  {tb:>8.3f}s  {ratio}")
    print()
    print("speedup = numpy time / numba time; n/a = the numpy backend needs")
    print("the minimal cut-sets, whose enumeration exceeds the state budget.")


if __name__ == "__main__":
    main()
