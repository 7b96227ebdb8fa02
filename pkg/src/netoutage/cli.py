"""Command-line front end.

Subcommands: analyze, paths, cuts, sweep, simulate, capacity.  Exit
codes: 0 success, 2 validation or parse problem, 3 enumeration budget
exceeded, 4 internal invariant violation.

Sweep output is CSV on stdout with '\\n' line endings and values from
the exact engine formatted to 12 significant digits; the grid and all
curve evaluations run in rational arithmetic, so the bytes depend only
on the inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .capacity import CapacitySpectrum, capacity_spectrum
from .correlated import correlated_outage, partition_from_json
from .enumeration import (
    DEFAULT_STATE_BUDGET,
    CutFamily,
    enumerate_cutsets,
    enumerate_paths,
)
from .errors import (
    BudgetExceeded,
    InternalError,
    InvalidConfig,
    NetOutageError,
    ParseError,
    ValidationError,
)
from .network import Network, indices_from_mask, load_network
from .outage import (
    DEFAULT_TERM_BUDGET,
    asymptotic_summary,
    cut_enumerator,
    outage_bounds,
    outage_polynomial,
)
from .polynomial import Poly
from .simulate import SimConfig, exact_reference, simulate

__all__ = ["main", "build_parser"]


def _add_common(sub: argparse.ArgumentParser):
    sub.add_argument("--input", "-i", required=True, help="network file")
    sub.add_argument(
        "--format",
        choices=("auto", "json", "dot"),
        default="auto",
        help="input format (auto: by file extension)",
    )
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument(
        "--budget",
        type=int,
        default=None,
        help="enumeration budget: max inclusion-exclusion terms and edge states",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netoutage",
        description="Exact outage and capacity analysis of source-terminal networks.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_analyze = subs.add_parser("analyze", help="full report: cuts, outage, bounds, capacity")
    _add_common(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_paths = subs.add_parser("paths", help="list source-terminal paths")
    _add_common(p_paths)
    p_paths.set_defaults(func=cmd_paths)

    p_cuts = subs.add_parser("cuts", help="list cut-set families and the enumerator")
    _add_common(p_cuts)
    p_cuts.set_defaults(func=cmd_cuts)

    p_capacity = subs.add_parser("capacity", help="capacity distribution polynomials")
    _add_common(p_capacity)
    p_capacity.set_defaults(func=cmd_capacity)

    p_sweep = subs.add_parser("sweep", help="CSV curves over a probability grid")
    _add_common(p_sweep)
    p_sweep.add_argument("--p-start", type=Fraction, default=Fraction(0))
    p_sweep.add_argument("--p-end", type=Fraction, default=Fraction(1))
    p_sweep.add_argument("--steps", type=int, default=101)
    p_sweep.add_argument(
        "--curves",
        default="outage",
        help="comma list: outage,bounds,capacity,ergodic,correlated",
    )
    p_sweep.add_argument("--rho", default=None, help="comma list of correlation values")
    p_sweep.add_argument("--partition", default=None, help="correlation partition file")
    p_sweep.set_defaults(func=cmd_sweep)

    p_sim = subs.add_parser("simulate", help="Monte Carlo estimate, JSON report")
    _add_common(p_sim)
    p_sim.add_argument("--p", type=float, default=None, help="edge failure probability")
    p_sim.add_argument("--probs", default=None, help="JSON file: per-edge probabilities")
    p_sim.add_argument("--snr", default=None, help="JSON file: mean SNR(s)")
    p_sim.add_argument("--rho", type=float, default=None)
    p_sim.add_argument("--partition", default=None, help="correlation partition file")
    p_sim.add_argument("--trials", type=int, default=100_000)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--check", action="store_true", help="compare against exact values")
    p_sim.set_defaults(func=cmd_simulate)

    return parser


def _budgets(args) -> tuple[int, int]:
    if args.budget is not None:
        if args.budget <= 0:
            raise InvalidConfig(f"budget must be positive, got {args.budget}")
        return args.budget, args.budget
    return DEFAULT_STATE_BUDGET, DEFAULT_TERM_BUDGET


def _load(args) -> Network:
    return load_network(args.input, fmt=args.format)


def _cut_lists(masks) -> list[list[int]]:
    return [list(indices_from_mask(c)) for c in masks]


def cmd_analyze(args) -> int:
    net = _load(args)
    state_budget, _ = _budgets(args)
    paths = enumerate_paths(net)
    cuts = enumerate_cutsets(net, state_budget=state_budget)
    enum = cut_enumerator(cuts)
    outage = outage_polynomial(cuts)
    asy = asymptotic_summary(cuts)
    bounds = outage_bounds(cuts, Poly.x())
    spectrum = capacity_spectrum(net, cuts, state_budget=state_budget)
    if args.json:
        doc = {
            "nodes": net.node_count,
            "edges": net.edge_count,
            "source": net.source,
            "terminal": net.terminal,
            "path_count": paths.g,
            "cut_count": cuts.k,
            "minimal_cut_count": len(cuts.minimal_cuts),
            "minimum_cut_count": len(cuts.minimum_cuts),
            "min_cut_size": cuts.m,
            "enumerator": enum.coeff_strings(),
            "outage": outage.coeff_strings(),
            "diversity": asy.diversity,
            "coding_gain": asy.coding_gain,
            "bounds": {
                "lower": bounds.lower.coeff_strings(),
                "upper_enumerator": bounds.upper_enumerator.coeff_strings(),
                "upper_union": bounds.upper_union.coeff_strings(),
            },
            "capacity": spectrum.to_json_dict(),
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(
        f"nodes = {net.node_count}, edges n = {net.edge_count}, "
        f"source = {net.source}, terminal = {net.terminal}"
    )
    print(f"paths g = {paths.g}")
    print(
        f"cut-sets k = {cuts.k}, minimal |L| = {len(cuts.minimal_cuts)}, "
        f"minimum |M| = {len(cuts.minimum_cuts)}, m = {cuts.m}"
    )
    print(f"A(x) = {enum.format('x')}")
    print(f"O(p) = {outage.format()}")
    print(f"d = {asy.diversity}, alpha = {asy.coding_gain}")
    print(f"lower bound: {bounds.lower.format()}")
    print(f"upper bound (enumerator): {bounds.upper_enumerator.format()}")
    print(f"upper bound (union): {bounds.upper_union.format()}")
    for c, poly in enumerate(spectrum.polynomials):
        print(f"C_{c}(p) = {poly.format()}")
    print(f"E[C](p) = {spectrum.ergodic.format()}")
    return 0


def cmd_paths(args) -> int:
    net = _load(args)
    paths = enumerate_paths(net)
    if args.json:
        doc = {"count": paths.g, "paths": [list(w) for w in paths.walks]}
        print(json.dumps(doc, indent=2))
        return 0
    print(f"g = {paths.g}")
    for i, walk in enumerate(paths.walks):
        print(f"path {i + 1}: edges {list(walk)}")
    return 0


def cmd_cuts(args) -> int:
    net = _load(args)
    state_budget, _ = _budgets(args)
    cuts = enumerate_cutsets(net, state_budget=state_budget)
    enum = cut_enumerator(cuts)
    if args.json:
        doc = {
            "k": cuts.k,
            "m": cuts.m,
            "all": _cut_lists(cuts.all_cuts),
            "minimal": _cut_lists(cuts.minimal_cuts),
            "minimum": _cut_lists(cuts.minimum_cuts),
            "enumerator": enum.coeff_strings(),
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"k = {cuts.k}, m = {cuts.m}")
    print(f"A(x) = {enum.format('x')}")
    print(f"minimal cut-sets ({len(cuts.minimal_cuts)}):")
    for c in cuts.minimal_cuts:
        print(f"  {list(indices_from_mask(c))}")
    print(f"minimum cut-sets ({len(cuts.minimum_cuts)}):")
    for c in cuts.minimum_cuts:
        print(f"  {list(indices_from_mask(c))}")
    return 0


def cmd_capacity(args) -> int:
    net = _load(args)
    state_budget, _ = _budgets(args)
    cuts = enumerate_cutsets(net, state_budget=state_budget)
    spectrum = capacity_spectrum(net, cuts, state_budget=state_budget)
    if args.json:
        print(json.dumps(spectrum.to_json_dict(), indent=2))
        return 0
    print(f"m = {spectrum.m}")
    for c, poly in enumerate(spectrum.polynomials):
        print(f"C_{c}(p) = {poly.format()}")
    print(f"E[C](p) = {spectrum.ergodic.format()}")
    return 0


def _sweep_columns(args, net: Network, cuts: CutFamily):
    """Build (name, evaluator) pairs for the requested curves."""
    columns = []
    spectrum: CapacitySpectrum | None = None
    state_budget, _ = _budgets(args)

    def need_spectrum() -> CapacitySpectrum:
        nonlocal spectrum
        if spectrum is None:
            spectrum = capacity_spectrum(net, cuts, state_budget=state_budget)
        return spectrum

    for curve in args.curves.split(","):
        curve = curve.strip()
        if curve == "outage":
            poly = outage_polynomial(cuts)
            columns.append(("outage", poly))
        elif curve == "bounds":
            bounds = outage_bounds(cuts, Poly.x())
            columns.append(("bound_lower", bounds.lower))
            columns.append(("bound_upper_enumerator", bounds.upper_enumerator))
            columns.append(("bound_upper_union", bounds.upper_union))
        elif curve == "capacity":
            spec = need_spectrum()
            for c, poly in enumerate(spec.polynomials):
                columns.append((f"capacity_{c}", poly))
        elif curve == "ergodic":
            columns.append(("ergodic", need_spectrum().ergodic))
        elif curve == "correlated":
            if args.partition is None:
                raise InvalidConfig("correlated curves need --partition")
            with open(args.partition, encoding="utf-8") as fh:
                partition, file_rho = partition_from_json(fh.read(), net.edge_count)
            if args.rho is not None:
                rho_tokens = [t.strip() for t in args.rho.split(",")]
            elif file_rho is not None:
                rho_tokens = [repr(file_rho)]
            else:
                raise InvalidConfig("correlated curves need --rho or a partition rho")
            for token in rho_tokens:
                try:
                    rho = Fraction(token)
                except ValueError as exc:
                    raise InvalidConfig(f"bad rho value {token!r}") from exc
                if not 0 <= rho <= 1:
                    raise InvalidConfig(f"rho must lie in [0, 1], got {token}")
                poly2 = correlated_outage(cuts, partition, Poly.x(), rho)
                columns.append((f"correlated_rho_{token}", poly2))
        else:
            raise InvalidConfig(f"unknown curve {curve!r}")
    return columns


def cmd_sweep(args) -> int:
    net = _load(args)
    state_budget, _ = _budgets(args)
    if args.steps < 2:
        raise InvalidConfig(f"steps must be at least 2, got {args.steps}")
    if not 0 <= args.p_start <= args.p_end <= 1:
        raise InvalidConfig("need 0 <= p-start <= p-end <= 1")
    cuts = enumerate_cutsets(net, state_budget=state_budget)
    columns = _sweep_columns(args, net, cuts)
    out = sys.stdout
    out.write("p," + ",".join(name for name, _ in columns) + "\n")
    span = args.p_end - args.p_start
    for i in range(args.steps):
        p = args.p_start + span * i / (args.steps - 1)
        cells = [format(float(p), ".12g")]
        for _, poly in columns:
            cells.append(format(float(poly(p)), ".12g"))
        out.write(",".join(cells) + "\n")
    return 0


def _scalar_or_list(path: str, label: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {label} file: {exc}") from exc
    if isinstance(doc, (int, float)) and not isinstance(doc, bool):
        return float(doc)
    if isinstance(doc, list) and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in doc
    ):
        return tuple(float(v) for v in doc)
    raise ParseError(f"{label} file must hold a number or a list of numbers")


def cmd_simulate(args) -> int:
    net = _load(args)
    p = args.p
    probs = snr = None
    if args.probs is not None:
        loaded = _scalar_or_list(args.probs, "probs")
        if isinstance(loaded, float):
            p = loaded
        else:
            probs = loaded
    if args.snr is not None:
        snr = _scalar_or_list(args.snr, "snr")
    partition = None
    rho = args.rho
    if args.partition is not None:
        with open(args.partition, encoding="utf-8") as fh:
            partition, file_rho = partition_from_json(fh.read(), net.edge_count)
        if rho is None:
            rho = file_rho
    cfg = SimConfig(
        trials=args.trials,
        seed=args.seed,
        p=p,
        probs=probs,
        snr=snr,
        rho=rho,
        partition=partition,
    )
    report = simulate(net, cfg)
    doc = report.to_json_dict()
    if args.check:
        state_budget, _ = _budgets(args)
        ref = exact_reference(net, cfg, state_budget=state_budget)
        doc["check"] = {
            "outage_exact": ref.outage,
            "ergodic_exact": ref.ergodic_capacity,
            "outage_z": _zscore(report.outage_estimate, ref.outage, report.outage_stderr),
            "capacity_z": _zscore(
                report.capacity_mean, ref.ergodic_capacity, report.capacity_stderr
            ),
        }
    print(json.dumps(doc, indent=2))
    return 0


def _zscore(estimate: float, exact: float, stderr: float) -> float:
    diff = estimate - exact
    if stderr == 0.0:
        return 0.0 if abs(diff) < 1e-15 else math.inf
    return diff / stderr


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    except NetOutageError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
