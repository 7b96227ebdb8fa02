"""Unit-capacity s-t max-flow by augmenting paths.

The flow value of the full network is the minimum cut size; the flow
value of a surviving-edge subgraph is the instantaneous capacity.  The
residual graph uses paired arcs: edge j owns arc 2j (forward) and arc
2j+1 (reverse), so an arc's partner is ``arc ^ 1``.  Integer arithmetic
only.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .network import Network

__all__ = ["arc_arrays", "max_flow"]


@lru_cache(maxsize=128)
def arc_arrays(net: Network):
    """CSR residual-arc layout for a network.

    Returns (csr_ptr, csr_arc, arc_head): csr_ptr/csr_arc index the arcs
    leaving each node, arc_head[a] is the node arc a points at.
    """
    n = net.edge_count
    arc_from = np.empty(2 * n, dtype=np.int64)
    arc_head = np.empty(2 * n, dtype=np.int64)
    for j, (tail, head) in enumerate(net.edges):
        arc_from[2 * j] = tail
        arc_head[2 * j] = head
        arc_from[2 * j + 1] = head
        arc_head[2 * j + 1] = tail
    order = np.argsort(arc_from, kind="stable")
    csr_arc = order.astype(np.int64)
    counts = np.bincount(arc_from, minlength=net.node_count)
    csr_ptr = np.zeros(net.node_count + 1, dtype=np.int64)
    np.cumsum(counts, out=csr_ptr[1:])
    return csr_ptr, csr_arc, arc_head


def max_flow(net: Network, alive_mask: int | None = None) -> int:
    """Max-flow from source to terminal over the alive edges.

    ``alive_mask`` selects the surviving edge subset (bit j = edge j
    alive); None means all edges.  Each alive edge has capacity one.
    """
    n = net.edge_count
    if alive_mask is None:
        alive_mask = (1 << n) - 1
    csr_ptr, csr_arc, arc_head = arc_arrays(net)
    cap = bytearray(2 * n)
    for j in range(n):
        cap[2 * j] = (alive_mask >> j) & 1

    src, dst = net.source, net.terminal
    parent = [0] * net.node_count
    flow = 0
    while True:
        # BFS for an augmenting path in the residual graph
        seen = [False] * net.node_count
        seen[src] = True
        queue = [src]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            u = queue[qi]
            qi += 1
            for k in range(csr_ptr[u], csr_ptr[u + 1]):
                arc = csr_arc[k]
                if not cap[arc]:
                    continue
                v = arc_head[arc]
                if seen[v]:
                    continue
                seen[v] = True
                parent[v] = arc
                if v == dst:
                    found = True
                    break
                queue.append(v)
        if not found:
            return flow
        v = dst
        while v != src:
            arc = parent[v]
            cap[arc] -= 1
            cap[arc ^ 1] += 1
            v = arc_head[arc ^ 1]
        flow += 1
