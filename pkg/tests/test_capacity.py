import random
from fractions import Fraction

import pytest

from conftest import disjoint_path_capacity, random_cases

from netoutage import (
    DisjointCutsRequired,
    Poly,
    build_network,
    capacity_spectrum,
    capacity_spectrum_disjoint,
    enumerate_cutsets,
    instantaneous_capacity,
    outage_polynomial,
    survivor_tail_poly,
)

CASES = random_cases(15, seed=31)

ERGODIC_GOLDEN = {
    "n1": Poly([1, -1, -1, 1]),
    "n2": Poly([2, -4, 4, -4, 2]),
    "n4": Poly([2, -5, 6, -8, 9, -5, 1]),
    "n5": Poly([2, -4, 2]),
    "n6": Poly([3, -5, 2]),
}


def test_ergodic_goldens(nets):
    for name, expected in ERGODIC_GOLDEN.items():
        spectrum = capacity_spectrum(nets[name], enumerate_cutsets(nets[name]))
        assert spectrum.ergodic == expected, name


def test_n2_level_polynomials(nets):
    spectrum = capacity_spectrum(nets["n2"], enumerate_cutsets(nets["n2"]))
    assert spectrum.m == 2
    assert spectrum.polynomials[0] == Poly([0, 0, 2, 0, -1])
    assert spectrum.polynomials[1] == Poly([0, 4, -8, 4])
    assert spectrum.polynomials[2] == Poly.one_minus_x() ** 4


def test_levels_sum_to_one_and_c0_is_outage(nets):
    for net in nets.values():
        cuts = enumerate_cutsets(net)
        spectrum = capacity_spectrum(net, cuts)
        total = Poly.zero()
        for poly in spectrum.polynomials:
            total = total + poly
        assert total == Poly.one()
        assert spectrum.polynomials[0] == outage_polynomial(cuts)
        assert spectrum.m == cuts.m


def test_spectrum_endpoints(nets):
    for net in nets.values():
        spectrum = capacity_spectrum(net, enumerate_cutsets(net))
        assert spectrum.ergodic(0) == spectrum.m  # everything alive
        assert spectrum.ergodic(1) == 0
        assert spectrum.polynomials[spectrum.m](0) == 1


def test_disjoint_route_matches_state_scan(nets):
    cuts = enumerate_cutsets(nets["n2"])
    scan = capacity_spectrum(nets["n2"], cuts)
    product = capacity_spectrum_disjoint(cuts.minimal_cuts)
    assert product.polynomials == scan.polynomials
    assert product.ergodic == scan.ergodic


def test_disjoint_route_rejects_overlap(nets):
    cuts = enumerate_cutsets(nets["n5"])
    with pytest.raises(DisjointCutsRequired):
        capacity_spectrum_disjoint(cuts.minimal_cuts)


def test_disjoint_route_on_series_of_parallel_banks():
    # three banks of parallel edges in series: L is disjoint by construction
    net = build_network(4, [(0, 1)] * 2 + [(1, 2)] * 3 + [(2, 3)] * 2, 0, 3)
    cuts = enumerate_cutsets(net)
    scan = capacity_spectrum(net, cuts)
    product = capacity_spectrum_disjoint(cuts.minimal_cuts)
    assert product.polynomials == scan.polynomials
    assert product.ergodic == scan.ergodic
    assert product.m == 2


def test_survivor_tail_poly():
    # at least 1 of 2 survives: 1 - p^2
    assert survivor_tail_poly(1, 2) == 1 - Poly.x() ** 2
    assert survivor_tail_poly(0, 3) == Poly.one()
    assert survivor_tail_poly(2, 2) == Poly.one_minus_x() ** 2
    # tail at k+1 never exceeds tail at k on [0, 1]
    for p in [Fraction(i, 10) for i in range(11)]:
        assert survivor_tail_poly(2, 4)(p) <= survivor_tail_poly(1, 4)(p)


def test_instantaneous_capacity_against_oracle():
    rng = random.Random(55)
    for (nv, edges, s, t), net in CASES[:8]:
        n = len(edges)
        for alive in [0, (1 << n) - 1] + [rng.randrange(1 << n) for _ in range(8)]:
            assert instantaneous_capacity(net, alive) == disjoint_path_capacity(
                nv, edges, s, t, alive
            )


@pytest.mark.parametrize("case_idx", range(len(CASES)))
def test_ergodic_equals_expected_capacity_state_sum(case_idx):
    (nv, edges, s, t), net = CASES[case_idx]
    spectrum = capacity_spectrum(net, enumerate_cutsets(net))
    p = Fraction(3, 10)
    n = len(edges)
    expected = Fraction(0)
    for alive in range(1 << n):
        cap = disjoint_path_capacity(nv, edges, s, t, alive)
        bits = bin(alive).count("1")
        expected += cap * (1 - p) ** bits * p ** (n - bits)
    assert spectrum.ergodic(p) == expected


def test_json_shape(nets):
    spectrum = capacity_spectrum(nets["n2"], enumerate_cutsets(nets["n2"]))
    doc = spectrum.to_json_dict()
    assert doc["m"] == 2
    assert doc["C"][1] == ["0", "4", "-8", "4"]
    assert doc["ergodic"] == ["2", "-4", "4", "-4", "2"]
