"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own machinery: plain
BFS for connectivity, backtracking over simple paths for capacity, and
a literal sum over all 2^n edge states for outage.  They are slow and
obviously correct, which is the point.
"""

import random
from fractions import Fraction

import pytest

from netoutage import Network, build_network

FIXTURE_ARGS = {
    "n1": (3, [(0, 1), (1, 2), (1, 2)], 0, 2),
    "n2": (3, [(0, 1), (0, 1), (1, 2), (1, 2)], 0, 2),
    "n3": (3, [(0, 1), (1, 2)], 0, 2),
    "n4": (5, [(0, 2), (0, 1), (1, 3), (2, 3), (2, 4), (3, 4)], 0, 4),
    "n5": (4, [(0, 1), (0, 2), (1, 3), (2, 3)], 0, 3),
    "n6": (4, [(0, 1), (0, 3), (0, 2), (1, 3), (2, 3)], 0, 3),
}


@pytest.fixture(scope="session")
def nets() -> dict[str, Network]:
    return {name: build_network(*args) for name, args in FIXTURE_ARGS.items()}


def bfs_connected(node_count, edges, source, terminal, alive_mask):
    """Terminal reachable from source using only alive edges."""
    adj = [[] for _ in range(node_count)]
    for j, (a, b) in enumerate(edges):
        if (alive_mask >> j) & 1:
            adj[a].append(b)
    seen = {source}
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return terminal in seen


def simple_paths(node_count, edges, source, terminal, alive_mask):
    """All simple s-t paths (as edge index tuples) in the alive subgraph."""
    out = [[] for _ in range(node_count)]
    for j, (a, b) in enumerate(edges):
        if (alive_mask >> j) & 1:
            out[a].append((j, b))
    found = []
    stack = []
    onpath = {source}

    def walk(v):
        if v == terminal:
            found.append(tuple(stack))
            return
        for j, w in out[v]:
            if w not in onpath:
                onpath.add(w)
                stack.append(j)
                walk(w)
                stack.pop()
                onpath.discard(w)

    walk(source)
    return found


def disjoint_path_capacity(node_count, edges, source, terminal, alive_mask):
    """Largest number of pairwise edge-disjoint s-t paths, by backtracking."""
    paths = simple_paths(node_count, edges, source, terminal, alive_mask)
    masks = []
    for walk in paths:
        m = 0
        for j in walk:
            m |= 1 << j
        masks.append(m)

    best = 0

    def search(i, used, depth):
        nonlocal best
        best = max(best, depth)
        if i >= len(masks) or depth + (len(masks) - i) <= best:
            return
        if not masks[i] & used:
            search(i + 1, used | masks[i], depth + 1)
        search(i + 1, used, depth)

    search(0, 0, 0)
    return best


def state_sum_outage(node_count, edges, source, terminal, probs):
    """Exact outage as a literal sum over every edge state."""
    n = len(edges)
    total = 0
    for alive in range(1 << n):
        if bfs_connected(node_count, edges, source, terminal, alive):
            continue
        weight = 1
        for j in range(n):
            weight = weight * ((1 - probs[j]) if (alive >> j) & 1 else probs[j])
        total = total + weight
    return total


def brute_minimal_cuts(node_count, edges, source, terminal):
    """Minimal cut-sets by definition: cuts with no single-edge-removable subset."""
    n = len(edges)
    full = (1 << n) - 1
    cuts = [
        c
        for c in range(1 << n)
        if not bfs_connected(node_count, edges, source, terminal, full ^ c)
    ]
    cut_set = set(cuts)
    minimal = []
    for c in cuts:
        if all(c ^ (1 << j) not in cut_set for j in range(n) if (c >> j) & 1):
            minimal.append(c)
    return cuts, minimal


def random_net_args(rng: random.Random):
    """One random acyclic multigraph; node ids are already a topological order."""
    nv = rng.randint(3, 6)
    n = rng.randint(2, 10)
    edges = []
    for _ in range(n):
        a, b = sorted(rng.sample(range(nv), 2))
        edges.append((a, b))
    return nv, edges, 0, nv - 1


def random_cases(count, seed=20260816):
    """Deterministic list of (args, Network) test cases, filtered so the
    inclusion-exclusion routes stay affordable."""
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        nv, edges, s, t = random_net_args(rng)
        full = (1 << len(edges)) - 1
        if not bfs_connected(nv, edges, s, t, full):
            continue
        if len(simple_paths(nv, edges, s, t, full)) > 14:
            continue
        _, minimal = brute_minimal_cuts(nv, edges, s, t)
        if len(minimal) > 14:
            continue
        cases.append(((nv, edges, s, t), build_network(nv, edges, s, t)))
    return cases


def random_prob_vector(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(1, 99), 100) for _ in range(n)]
