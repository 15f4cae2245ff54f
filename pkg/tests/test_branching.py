import math

import pytest
from hypothesis import assume, given, strategies as st

from qtreesearch import branching as br


def ceil_log2(b):
    """Smallest n with 2**n >= b, by counting."""
    n = 0
    while 2**n < b:
        n += 1
    return max(n, 1)


@pytest.mark.parametrize("b_max,d,expected", [(5, 10, 32768), (2, 2, 2), (3, 3, 8), (5, 3, 22), (2, 1, 1)])
def test_grover_iterations(b_max, d, expected):
    assert br.grover_iterations(br.BranchingScenario(b_max, 1, d)) == expected


def test_grover_iterations_large_exact():
    scenario = br.BranchingScenario(1000, 2, 40)  # 10 bits/level -> 2**200
    assert br.grover_iterations(scenario) == 2**200


@given(st.integers(2, 300), st.integers(1, 60))
def test_grover_iterations_square(b_max, d):
    scenario = br.BranchingScenario(b_max, 1, d)
    g = br.grover_iterations(scenario)
    exponent = ceil_log2(b_max) * d
    if exponent % 2 == 0:
        assert g * g == 2**exponent
    else:
        assert g * g < 2**exponent < (g + 1) ** 2


@pytest.mark.parametrize("b,d,expected", [(5, 10, 9765625), (3, 10, 59049), (7, 0, 1), (2.5, 2, 6.25)])
def test_classical_node_count(b, d, expected):
    assert br.classical_node_count(b, d) == pytest.approx(expected, rel=1e-15)


def test_classical_node_count_overflow():
    assert br.classical_node_count(1.5, 10**6) == math.inf


def test_crossover_values():
    assert br.crossover_b_avg(5) == pytest.approx(2.8284271, abs=1e-7)
    assert br.crossover_b_avg(4) == 2.0
    assert len({br.crossover_b_avg(b) for b in (5, 6, 7, 8)}) == 1


def test_ladder_plateaus_and_steps():
    rows = br.ladder_table(range(2, 129))
    by_b = {r.b_max: r.threshold for r in rows}
    assert by_b[2] != by_b[3]
    assert by_b[3] == by_b[4]
    assert len({by_b[b] for b in range(5, 9)}) == 1
    assert len({by_b[b] for b in range(9, 17)}) == 1
    assert abs(by_b[9] / by_b[5] - math.sqrt(2)) < 1e-12
    for r in rows:
        assert r.smooth == pytest.approx(math.sqrt(r.b_max), rel=1e-15)
        assert r.smooth_upper == pytest.approx(math.sqrt(2) * r.smooth, rel=1e-15)
        # stepped curve lies between the two smooth variants
        assert r.smooth <= r.threshold + 1e-12 and r.threshold < r.smooth_upper


def test_ladder_csv_sorted():
    text = br.ladder_csv(br.ladder_table([9, 3, 2]))
    lines = text.splitlines()
    assert lines[0] == "b_max,threshold,smooth,smooth_upper"
    assert [line.split(",")[0] for line in lines[1:]] == ["2", "3", "9"]


def test_speedup_worked_scenario():
    report = br.speedup_report(br.BranchingScenario(5, 3, 10))
    assert (report.classical_max, report.classical_avg, report.grover) == (9765625, 59049, 32768)
    assert report.ratio_max_avg == pytest.approx(9765625 / 59049)
    assert report.ratio_avg_grover == pytest.approx(59049 / 32768)
    assert report.hybrid_wins


@pytest.mark.parametrize("b_max,d", [(5, 10), (5, 3), (4, 7), (100, 5)])
def test_speedup_at_crossover_is_one(b_max, d):
    report = br.speedup_report(br.BranchingScenario(b_max, br.crossover_b_avg(b_max), d))
    assert abs(report.ratio_avg_grover - 1.0) < 1e-9


def test_classical_wins_below_crossover():
    report = br.speedup_report(br.BranchingScenario(5, 2.5, 10))
    assert report.ratio_avg_grover < 1 and not report.hybrid_wins


@given(st.integers(2, 128), st.floats(1, 128), st.integers(1, 30))
def test_crossover_is_depth_independent(b_max, b_avg, d):
    assume(b_avg <= b_max)
    threshold = br.crossover_b_avg(b_max)
    assume(abs(b_avg - threshold) > 1e-9 * threshold)
    scenario = br.BranchingScenario(b_max, b_avg, d)
    classical = br.classical_node_count(b_avg, d)
    assert (b_avg > threshold) == (classical > br.grover_iterations_real(scenario))


def test_scenario_validation():
    for args in [(1, 1, 1), (5, 6, 1), (5, 0.5, 1), (5, 2, 0)]:
        with pytest.raises(ValueError):
            br.BranchingScenario(*args)


def test_theta_examples():
    assert br.theta_of_depth(4, 8) == pytest.approx(math.pi / 4, abs=1e-15)
    assert br.theta_of_depth(4, 0) == 0
    assert br.theta_of_depth(4, 1) == pytest.approx(0.2526803, abs=1e-7)
    assert br.theta_of_depth(4, 16) == pytest.approx(math.pi / 2, abs=1e-15)


def test_delta_theta_examples():
    assert br.delta_theta(5, 7, 7) == 0
    assert br.delta_theta(6, 0, 64) == pytest.approx(math.pi / 2, abs=1e-15)
    assert br.delta_theta(4, 1, 4) == pytest.approx(0.5235988 - 0.2526803, abs=1e-7)
    assert br.delta_theta(4, 1, 4) == pytest.approx(0.2709185, abs=1e-7)


n_and_ks = st.integers(1, 20).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 2**n), min_size=3, max_size=3))
)


@given(n_and_ks)
def test_theta_telescopes_and_is_antisymmetric(args):
    n, (k1, k2, k3) = args
    assert abs(br.delta_theta(n, k1, k2) + br.delta_theta(n, k2, k3) - br.delta_theta(n, k1, k3)) < 1e-12
    assert br.delta_theta(n, k1, k2) == -br.delta_theta(n, k2, k1)
    if k2 >= k1:
        assert br.delta_theta(n, k1, k2) >= 0


@given(st.integers(1, 20).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1))))
def test_theta_strictly_increasing(args):
    n, k = args
    assert br.theta_of_depth(n, k + 1) > br.theta_of_depth(n, k)


@given(st.integers(1, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n))))
def test_depth_states_unit_length(args):
    n, k = args
    good, bad = br.depth_state(n, k)
    assert abs(good**2 + bad**2 - 1) < 1e-12
    assert math.atan2(good, bad) == pytest.approx(br.theta_of_depth(n, k), abs=1e-12)


def test_limit_check_converges():
    check = br.psi_kd_limit_check(10, 40, [1, 5, 12, 30, 40])
    assert check.nondecreasing_input and check.distances_monotone and check.converged
    assert check.distances[-1] == 0


def test_limit_check_flags_decreasing_input():
    check = br.psi_kd_limit_check(10, 5, [40, 20, 5])
    assert not check.nondecreasing_input
    assert check.converged


def test_depth_profile():
    assert br.DepthSolutionProfile(8, {1: 2, 2: 5, 3: 5}).is_nondecreasing
    assert not br.DepthSolutionProfile(8, {1: 9, 2: 5}).is_nondecreasing


def test_bits_for_matches_counting():
    for b in range(1, 600):
        assert br.bits_for(b) == ceil_log2(b)
