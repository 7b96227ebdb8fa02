"""Hot-loop kernels with selectable backend.

Two interchangeable backends implement the state-scan and trial-scan
primitives: ``nb_backend`` (numba JIT, the default when numba imports)
and ``np_backend`` (pure numpy).  Selection: the ``NETOUTAGE_BACKEND``
environment variable (``auto``, ``numba``, or ``numpy``), overridable at
runtime with :func:`use_backend`.  Both backends return identical
arrays; ``benchmarks/bench_kernels.py`` compares their speed.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from ..errors import InternalError
from ..flow import arc_arrays
from ..network import Network

__all__ = [
    "active_backend",
    "use_backend",
    "needs_cut_masks",
    "state_connectivity",
    "state_capacities",
    "trial_capacities",
    "warmup",
]

_requested = os.environ.get("NETOUTAGE_BACKEND", "auto")
_resolved: str | None = None


def _resolve(name: str) -> str:
    if name not in ("auto", "numba", "numpy"):
        raise ValueError(f"NETOUTAGE_BACKEND must be auto, numba, or numpy, not {name!r}")
    if name == "numpy":
        return "numpy"
    try:
        from . import nb_backend  # noqa: F401  (import check only)
        return "numba"
    except ImportError:
        if name == "numba":
            raise
        return "numpy"


def active_backend() -> str:
    """Resolved backend name, 'numba' or 'numpy'."""
    global _resolved
    if _resolved is None:
        _resolved = _resolve(_requested)
    return _resolved


def use_backend(name: str) -> str:
    """Force a backend ('auto', 'numba', 'numpy'); returns the previous one."""
    global _resolved
    previous = active_backend()
    _resolved = _resolve(name)
    return previous


def needs_cut_masks() -> bool:
    """True when the active backend requires minimal-cut masks for capacities."""
    if active_backend() == "numba":
        from . import nb_backend

        return nb_backend.NEEDS_CUT_MASKS
    from . import np_backend

    return np_backend.NEEDS_CUT_MASKS


@lru_cache(maxsize=128)
def _topo_edge_arrays(net: Network):
    order = net.edges_in_topo_order()
    tails = np.array([net.edges[j][0] for j in order], dtype=np.int64)
    heads = np.array([net.edges[j][1] for j in order], dtype=np.int64)
    ebits = np.array(order, dtype=np.int64)
    return tails, heads, ebits


def _masks_array(cut_masks) -> np.ndarray:
    if cut_masks is None:
        raise InternalError("numpy backend needs minimal-cut masks for capacities")
    return np.asarray(list(cut_masks), dtype=np.uint64)


def state_connectivity(net: Network) -> np.ndarray:
    """bool[2^n]: s-t connectivity for every alive-edge bitmask."""
    tails, heads, ebits = _topo_edge_arrays(net)
    if active_backend() == "numba":
        from . import nb_backend

        return nb_backend.connected_all_states(
            net.edge_count, tails, heads, ebits,
            net.node_count, net.source, net.terminal,
        )
    from . import np_backend

    return np_backend.connected_all_states(
        net.edge_count, tails, heads, ebits,
        net.node_count, net.source, net.terminal,
    )


def state_capacities(net: Network, cut_masks=None) -> np.ndarray:
    """uint8[2^n]: instantaneous capacity for every alive-edge bitmask."""
    if active_backend() == "numba":
        from . import nb_backend

        csr_ptr, csr_arc, arc_head = arc_arrays(net)
        return nb_backend.capacity_all_states_flow(
            net.edge_count, csr_ptr, csr_arc, arc_head, net.source, net.terminal
        )
    from . import np_backend

    return np_backend.capacity_all_states(net.edge_count, _masks_array(cut_masks))


def trial_capacities(net: Network, alive: np.ndarray, cut_masks=None) -> np.ndarray:
    """uint8[trials]: capacity per row of a boolean (trials, n) alive matrix."""
    if active_backend() == "numba":
        from . import nb_backend

        csr_ptr, csr_arc, arc_head = arc_arrays(net)
        return nb_backend.trial_capacities_flow(
            np.ascontiguousarray(alive), csr_ptr, csr_arc, arc_head,
            net.source, net.terminal,
        )
    from . import np_backend

    return np_backend.trial_capacities(alive, _masks_array(cut_masks))


def warmup() -> None:
    """Run every kernel once on a trivial network (pays JIT compile cost)."""
    net = Network(2, ((0, 1),), 0, 1)
    state_connectivity(net)
    masks = [1]
    state_capacities(net, masks)
    trial_capacities(net, np.ones((2, 1), dtype=bool), masks)
