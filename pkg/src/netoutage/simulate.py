"""Monte Carlo estimation of outage and capacity.

Each trial draws a surviving edge set, computes its capacity, and the
report aggregates a capacity histogram.  Draws happen outside the
kernels in a fixed chunk order from a seeded PCG64 generator, so a
given (seed, trials, config) produces the same report on every backend.

exact_reference computes the matching exact values by a direct scan of
all 2^n edge states in float arithmetic, independent of both the
polynomial machinery and the sampler, for use as a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .correlated import CorrelationPartition, block_outage_weight
from .enumeration import DEFAULT_STATE_BUDGET, CutFamily, enumerate_cutsets
from .errors import InvalidConfig, TooManyEdges
from .flow import max_flow
from .network import Network, rayleigh_outage_prob

CHUNK = 1 << 16

__all__ = ["CHUNK", "SimConfig", "SimReport", "ExactReference", "simulate", "exact_reference"]


@dataclass(frozen=True)
class SimConfig:
    """Sampler settings: exactly one probability source, optional correlation.

    The probability source is either a single edge failure probability
    (p), one probability per edge (probs), or mean SNRs (snr, scalar or
    per-edge) mapped through the flat Rayleigh-fading outage curve.
    Correlation needs both a partition and rho, and a single shared p.
    """

    trials: int
    seed: int
    p: float | None = None
    probs: tuple[float, ...] | None = None
    snr: float | tuple[float, ...] | None = None
    rho: float | None = None
    partition: CorrelationPartition | None = None

    def __post_init__(self):
        if self.trials <= 0:
            raise InvalidConfig(f"trials must be positive, got {self.trials}")
        sources = [v is not None for v in (self.p, self.probs, self.snr)]
        if sum(sources) != 1:
            raise InvalidConfig("exactly one of p, probs, snr must be given")
        if self.p is not None and not 0 <= self.p <= 1:
            raise InvalidConfig(f"p must lie in [0, 1], got {self.p}")
        if self.probs is not None:
            for v in self.probs:
                if not 0 <= v <= 1:
                    raise InvalidConfig(f"edge probability {v} outside [0, 1]")
        if (self.rho is None) != (self.partition is None):
            raise InvalidConfig("correlation needs both rho and a partition")
        if self.rho is not None:
            if not 0 <= self.rho <= 1:
                raise InvalidConfig(f"rho must lie in [0, 1], got {self.rho}")
            if self.p is None:
                raise InvalidConfig("correlated sampling needs a single shared p")

    def edge_fail_probs(self, net: Network) -> tuple[float, ...]:
        """Resolve the per-edge failure probabilities for a network."""
        n = net.edge_count
        if self.p is not None:
            return (float(self.p),) * n
        if self.probs is not None:
            if len(self.probs) != n:
                raise InvalidConfig(
                    f"expected {n} edge probabilities, got {len(self.probs)}"
                )
            return tuple(float(v) for v in self.probs)
        snr = self.snr
        if isinstance(snr, (int, float)):
            return (rayleigh_outage_prob(float(snr)),) * n
        if len(snr) != n:
            raise InvalidConfig(f"expected {n} mean SNRs, got {len(snr)}")
        return tuple(rayleigh_outage_prob(float(v)) for v in snr)


@dataclass(frozen=True)
class SimReport:
    """Aggregated Monte Carlo results.

    capacity_counts[c] is the number of trials with capacity c, for
    c = 0..m; outage is the capacity-0 fraction.  Standard errors are
    the binomial one for outage and the sample one for the mean.
    """

    trials: int
    seed: int
    edge_fail_probs: tuple[float, ...]
    rho: float | None
    capacity_counts: tuple[int, ...]
    outage_estimate: float
    outage_stderr: float
    capacity_mean: float
    capacity_stderr: float
    backend: str

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "edge_fail_probs": list(self.edge_fail_probs),
            "rho": self.rho,
            "capacity_counts": list(self.capacity_counts),
            "outage_estimate": self.outage_estimate,
            "outage_stderr": self.outage_stderr,
            "capacity_mean": self.capacity_mean,
            "capacity_stderr": self.capacity_stderr,
            "backend": self.backend,
        }


def _cut_masks_if_needed(net: Network, cuts: CutFamily | None):
    if cuts is not None:
        return cuts.minimal_cuts
    if kernels.needs_cut_masks():
        return enumerate_cutsets(net).minimal_cuts
    return None


def _draw_alive(rng, t: int, pvec: np.ndarray, cfg: SimConfig, net: Network) -> np.ndarray:
    """Draw t surviving-edge rows; the draw order is part of the seed contract."""
    n = net.edge_count
    if cfg.partition is None:
        return rng.random((t, n)) >= pvec
    blocks = cfg.partition.blocks
    f = len(blocks)
    u_block = rng.random((t, f))
    u_shared = rng.random((t, f))
    u_edge = rng.random((t, n))
    alive = np.empty((t, n), dtype=bool)
    for i, bmask in enumerate(blocks):
        shared = u_block[:, i] < cfg.rho
        shared_alive = u_shared[:, i] >= cfg.p
        for j in range(n):
            if (bmask >> j) & 1:
                alive[:, j] = np.where(shared, shared_alive, u_edge[:, j] >= cfg.p)
    return alive


def simulate(net: Network, cfg: SimConfig, cuts: CutFamily | None = None) -> SimReport:
    """Estimate the capacity distribution by seeded Monte Carlo."""
    pvec = np.asarray(cfg.edge_fail_probs(net), dtype=np.float64)
    if cfg.partition is not None and cfg.partition.edge_count != net.edge_count:
        raise InvalidConfig(
            f"partition covers {cfg.partition.edge_count} edges, network has {net.edge_count}"
        )
    masks = _cut_masks_if_needed(net, cuts)
    m = max_flow(net)
    hist = np.zeros(m + 1, dtype=np.int64)
    rng = np.random.default_rng(cfg.seed)
    done = 0
    while done < cfg.trials:
        t = min(CHUNK, cfg.trials - done)
        alive = _draw_alive(rng, t, pvec, cfg, net)
        caps = kernels.trial_capacities(net, alive, cut_masks=masks)
        hist += np.bincount(caps, minlength=m + 1)
        done += t

    trials = cfg.trials
    outage = hist[0] / trials
    outage_se = math.sqrt(outage * (1.0 - outage) / trials)
    levels = np.arange(m + 1, dtype=np.float64)
    mean = float(levels @ hist) / trials
    sq = float((levels * levels) @ hist)
    var = max(sq - trials * mean * mean, 0.0) / max(trials - 1, 1)
    return SimReport(
        trials=trials,
        seed=cfg.seed,
        edge_fail_probs=tuple(float(v) for v in pvec),
        rho=cfg.rho,
        capacity_counts=tuple(int(c) for c in hist),
        outage_estimate=float(outage),
        outage_stderr=outage_se,
        capacity_mean=mean,
        capacity_stderr=math.sqrt(var / trials),
        backend=kernels.active_backend(),
    )


@dataclass(frozen=True)
class ExactReference:
    """Exact outage and ergodic capacity for a sampler configuration."""

    outage: float
    ergodic_capacity: float


def _state_probabilities(net: Network, cfg: SimConfig, pvec: np.ndarray) -> np.ndarray:
    """Probability of every alive-mask state under the config's edge model."""
    n = net.edge_count
    states = np.arange(1 << n, dtype=np.uint64)
    if cfg.partition is None:
        prob = np.ones(1 << n, dtype=np.float64)
        for j in range(n):
            bit = (states >> np.uint64(j)) & np.uint64(1)
            prob *= np.where(bit == 1, 1.0 - pvec[j], pvec[j])
        return prob
    full = np.uint64((1 << n) - 1)
    failed = states ^ full
    prob = np.ones(1 << n, dtype=np.float64)
    for bmask in cfg.partition.blocks:
        x = bmask.bit_count()
        table = np.array(
            [block_outage_weight(x, y, cfg.p, cfg.rho) for y in range(x + 1)],
            dtype=np.float64,
        )
        y = np.bitwise_count(failed & np.uint64(bmask)).astype(np.int64)
        prob *= table[y]
    return prob


def exact_reference(
    net: Network,
    cfg: SimConfig,
    cuts: CutFamily | None = None,
    *,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> ExactReference:
    """Exact counterpart of a simulation, by direct state-space scan."""
    n = net.edge_count
    if (1 << n) > state_budget:
        raise TooManyEdges(
            f"2^{n} edge states exceed the state budget of {state_budget}"
        )
    pvec = np.asarray(cfg.edge_fail_probs(net), dtype=np.float64)
    masks = _cut_masks_if_needed(net, cuts)
    caps = kernels.state_capacities(net, cut_masks=masks).astype(np.float64)
    prob = _state_probabilities(net, cfg, pvec)
    return ExactReference(
        outage=float(prob[caps == 0].sum()),
        ergodic_capacity=float(prob @ caps),
    )
