"""Numba JIT kernels (the default backend).

Same contracts as np_backend, different method: capacities come from a
unit-capacity augmenting-path max-flow run per state or per trial, on
the paired-arc residual layout from flow.arc_arrays (arc 2j forward,
2j+1 reverse, partner = arc ^ 1).  Compiled with cache=True so repeat
sessions skip compilation.
"""

import numpy as np
from numba import njit

NEEDS_CUT_MASKS = False


@njit(cache=True)
def _connected_scan(n, tails, heads, ebits, node_count, source, terminal, out):
    stamp = np.zeros(node_count, dtype=np.int64)
    for s in range(out.size):
        cur = s + 1
        stamp[source] = cur
        for i in range(tails.size):
            if (s >> ebits[i]) & 1 and stamp[tails[i]] == cur:
                stamp[heads[i]] = cur
        out[s] = stamp[terminal] == cur


@njit(cache=True, inline="always")
def _augmenting_flow(cap, csr_ptr, csr_arc, arc_head, source, terminal,
                     parent, stamp, queue, cur):
    flow = 0
    while True:
        cur += 1
        stamp[source] = cur
        queue[0] = source
        qh, qt = 0, 1
        found = False
        while qh < qt and not found:
            u = queue[qh]
            qh += 1
            for k in range(csr_ptr[u], csr_ptr[u + 1]):
                arc = csr_arc[k]
                if cap[arc] == 0:
                    continue
                v = arc_head[arc]
                if stamp[v] == cur:
                    continue
                stamp[v] = cur
                parent[v] = arc
                if v == terminal:
                    found = True
                    break
                queue[qt] = v
                qt += 1
        if not found:
            return flow, cur
        v = terminal
        while v != source:
            arc = parent[v]
            cap[arc] -= 1
            cap[arc ^ 1] += 1
            v = arc_head[arc ^ 1]
        flow += 1


@njit(cache=True)
def _capacity_scan(n, csr_ptr, csr_arc, arc_head, source, terminal, out):
    node_count = csr_ptr.size - 1
    cap = np.zeros(2 * n, dtype=np.uint8)
    parent = np.zeros(node_count, dtype=np.int64)
    stamp = np.zeros(node_count, dtype=np.int64)
    queue = np.zeros(node_count, dtype=np.int64)
    cur = 0
    for s in range(out.size):
        for j in range(n):
            cap[2 * j] = (s >> j) & 1
            cap[2 * j + 1] = 0
        flow, cur = _augmenting_flow(
            cap, csr_ptr, csr_arc, arc_head, source, terminal,
            parent, stamp, queue, cur,
        )
        out[s] = flow


@njit(cache=True)
def _trial_scan(alive, csr_ptr, csr_arc, arc_head, source, terminal, out):
    n = alive.shape[1]
    node_count = csr_ptr.size - 1
    cap = np.zeros(2 * n, dtype=np.uint8)
    parent = np.zeros(node_count, dtype=np.int64)
    stamp = np.zeros(node_count, dtype=np.int64)
    queue = np.zeros(node_count, dtype=np.int64)
    cur = 0
    for r in range(alive.shape[0]):
        for j in range(n):
            cap[2 * j] = 1 if alive[r, j] else 0
            cap[2 * j + 1] = 0
        flow, cur = _augmenting_flow(
            cap, csr_ptr, csr_arc, arc_head, source, terminal,
            parent, stamp, queue, cur,
        )
        out[r] = flow


def connected_all_states(n, tails, heads, ebits, node_count, source, terminal):
    out = np.empty(1 << n, dtype=bool)
    _connected_scan(n, tails, heads, ebits, node_count, source, terminal, out)
    return out


def capacity_all_states_flow(n, csr_ptr, csr_arc, arc_head, source, terminal):
    out = np.empty(1 << n, dtype=np.uint8)
    _capacity_scan(n, csr_ptr, csr_arc, arc_head, source, terminal, out)
    return out


def trial_capacities_flow(alive, csr_ptr, csr_arc, arc_head, source, terminal):
    out = np.empty(alive.shape[0], dtype=np.uint8)
    _trial_scan(alive, csr_ptr, csr_arc, arc_head, source, terminal, out)
    return out
