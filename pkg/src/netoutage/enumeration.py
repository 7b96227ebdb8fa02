"""Enumeration of s-t paths and cut-sets.

Cut-set enumeration scans all 2^n edge subsets: a subset is a cut-set
exactly when removing it leaves the terminal unreachable.  The scan
reuses the state-connectivity kernel.  Minimal cut-sets are the cuts
that stop being cuts when any single edge is dropped; minimum cut-sets
are the cuts of smallest size.  Everything is emitted in ascending
bitmask order so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InternalError, TooManyEdges
from .flow import max_flow
from .network import Network

DEFAULT_STATE_BUDGET = 1 << 20

__all__ = [
    "DEFAULT_STATE_BUDGET",
    "PathSet",
    "CutFamily",
    "enumerate_paths",
    "enumerate_cutsets",
    "min_cut_size",
]


@dataclass(frozen=True)
class PathSet:
    """All simple directed s-t paths of a network.

    masks[i] is the edge bitmask of path i; walks[i] the edge indices in
    traversal order.  Paths are sorted by ascending bitmask.
    """

    masks: tuple[int, ...]
    walks: tuple[tuple[int, ...], ...]
    edge_count: int

    @property
    def g(self) -> int:
        return len(self.masks)

    def __len__(self) -> int:
        return len(self.masks)


@dataclass(frozen=True)
class CutFamily:
    """The cut-set families of a network, as edge bitmasks.

    all_cuts (K) holds every cut-set, minimal_cuts (L) the
    inclusion-minimal ones, minimum_cuts (M) the smallest ones; all
    three in ascending bitmask order, with M subset-of L subset-of K.
    """

    all_cuts: tuple[int, ...]
    minimal_cuts: tuple[int, ...]
    minimum_cuts: tuple[int, ...]
    m: int
    edge_count: int

    @property
    def k(self) -> int:
        return len(self.all_cuts)


def enumerate_paths(net: Network) -> PathSet:
    """Every simple directed path from source to terminal, by DFS."""
    out_edges: list[list[int]] = [[] for _ in range(net.node_count)]
    for j, (tail, _) in enumerate(net.edges):
        out_edges[tail].append(j)

    found: list[tuple[int, tuple[int, ...]]] = []
    walk: list[int] = []
    visited = [False] * net.node_count

    def dfs(v: int):
        if v == net.terminal:
            mask = 0
            for j in walk:
                mask |= 1 << j
            found.append((mask, tuple(walk)))
            return
        visited[v] = True
        for j in out_edges[v]:
            head = net.edges[j][1]
            if not visited[head]:
                walk.append(j)
                dfs(head)
                walk.pop()
        visited[v] = False

    dfs(net.source)
    found.sort()
    masks = tuple(mask for mask, _ in found)
    if len(set(masks)) != len(masks):
        raise InternalError("duplicate path edge sets")
    return PathSet(masks, tuple(w for _, w in found), net.edge_count)


def enumerate_cutsets(net: Network, *, state_budget: int = DEFAULT_STATE_BUDGET) -> CutFamily:
    """All cut-sets K, minimal cut-sets L, and minimum cut-sets M."""
    n = net.edge_count
    if (1 << n) > state_budget:
        raise TooManyEdges(
            f"2^{n} edge subsets exceed the state budget of {state_budget}"
        )
    connected = kernels.state_connectivity(net)
    full = (1 << n) - 1
    states = np.arange(1 << n, dtype=np.uint64)
    # C is a cut iff the surviving set full^C leaves t unreachable
    is_cut = ~connected[states ^ np.uint64(full)]
    cut_masks = states[is_cut]

    minimal = np.ones(cut_masks.size, dtype=bool)
    for e in range(n):
        bit = np.uint64(1 << e)
        has_edge = (cut_masks & bit) != 0
        still_cut = is_cut[cut_masks ^ bit]
        minimal &= ~(has_edge & still_cut)

    sizes = np.bitwise_count(cut_masks)
    m = int(sizes.min())
    return CutFamily(
        all_cuts=tuple(int(c) for c in cut_masks),
        minimal_cuts=tuple(int(c) for c in cut_masks[minimal]),
        minimum_cuts=tuple(int(c) for c in cut_masks[sizes == m]),
        m=m,
        edge_count=n,
    )


def min_cut_size(net: Network) -> int:
    """Size of a minimum cut-set, computed as the unit-capacity max-flow value."""
    return max_flow(net)
