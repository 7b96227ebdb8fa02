"""Vectorized numpy kernels (the no-JIT fallback).

State indices encode surviving-edge sets: bit j of the index means edge
j is alive.  Connectivity over all 2^n states is a single topological
sweep, vectorized across a chunk of states at a time.  Per-state and
per-trial capacities use the min-cut identity: the instantaneous
capacity equals the minimum, over the network's minimal cut-sets, of
the number of surviving edges in the cut.  Callers supply those cut
masks; the numba backend computes max-flow directly instead and needs
none.
"""

import numpy as np

CHUNK = 1 << 16

NEEDS_CUT_MASKS = True


def connected_all_states(n, tails, heads, ebits, node_count, source, terminal):
    """Boolean s-t connectivity for every alive-edge mask 0..2^n-1.

    tails/heads/ebits describe the edges sorted topologically: ebits[i]
    is the original (bit) index of the i-th edge in sweep order.
    """
    total = 1 << n
    out = np.empty(total, dtype=bool)
    for lo in range(0, total, CHUNK):
        hi = min(lo + CHUNK, total)
        idx = np.arange(lo, hi, dtype=np.uint64)
        reach = np.zeros((node_count, hi - lo), dtype=bool)
        reach[source] = True
        for tail, head, bit in zip(tails, heads, ebits):
            alive = ((idx >> np.uint64(bit)) & np.uint64(1)).astype(bool)
            np.logical_or(reach[head], reach[tail] & alive, out=reach[head])
        out[lo:hi] = reach[terminal]
    return out


def capacity_all_states(n, cut_masks):
    """Instantaneous capacity for every alive-edge mask, via minimal cuts."""
    total = 1 << n
    masks = np.asarray(cut_masks, dtype=np.uint64)
    out = np.empty(total, dtype=np.uint8)
    for lo in range(0, total, CHUNK):
        hi = min(lo + CHUNK, total)
        idx = np.arange(lo, hi, dtype=np.uint64)
        cap = np.full(hi - lo, 255, dtype=np.uint8)
        for mask in masks:
            np.minimum(cap, np.bitwise_count(idx & mask).astype(np.uint8), out=cap)
        out[lo:hi] = cap
    return out


def trial_capacities(alive, cut_masks):
    """Per-trial capacity for a boolean (trials, n) alive matrix."""
    n = alive.shape[1]
    weights = (np.uint64(1) << np.arange(n, dtype=np.uint64))
    packed = alive.astype(np.uint64) @ weights
    cap = np.full(alive.shape[0], 255, dtype=np.uint8)
    for mask in np.asarray(cut_masks, dtype=np.uint64):
        np.minimum(cap, np.bitwise_count(packed & mask).astype(np.uint8), out=cap)
    return cap
