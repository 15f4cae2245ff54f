import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qtreesearch import statevector as sv
from qtreesearch.errors import CapacityError, NoSolutionError


def exact_marked_probability(n_total, marked, iterations):
    """Grover iterates in units of 1/sqrt(N); amplitudes stay rational."""
    amps = [Fraction(1)] * n_total
    for _ in range(iterations):
        amps = [-a if i in marked else a for i, a in enumerate(amps)]
        mean = sum(amps) / n_total
        amps = [2 * mean - a for a in amps]
    return sum(amps[i] ** 2 for i in marked) / n_total


def test_uniform_one_qubit():
    state = sv.uniform_superposition(1)
    np.testing.assert_array_equal(state.amplitudes, [0.7071067811865476, 0.7071067811865476])


def test_uniform_three_qubits_real():
    state = sv.uniform_superposition(3)
    assert np.allclose(state.amplitudes, 1 / math.sqrt(8), atol=0, rtol=1e-15)
    assert np.all(state.amplitudes.imag == 0)


@pytest.mark.parametrize("m", [0, 27, 30])
def test_uniform_capacity(m):
    with pytest.raises(CapacityError):
        sv.uniform_superposition(m)


def test_capacity_can_be_raised():
    with pytest.raises(CapacityError):
        sv.check_capacity(28)
    sv.check_capacity(28, max_qubits=28)


def test_amplitudes_read_only():
    state = sv.uniform_superposition(2)
    with pytest.raises(ValueError):
        state.amplitudes[0] = 0


def test_wrong_length_rejected():
    with pytest.raises(ValueError):
        sv.StateVector(2, np.ones(3))


def test_phase_flip_single_index():
    state = sv.apply_phase_oracle(sv.uniform_superposition(2), {3})
    np.testing.assert_array_equal(state.amplitudes, [0.5, 0.5, 0.5, -0.5])


def test_phase_flip_nothing_marked():
    state = sv.uniform_superposition(3)
    assert np.array_equal(sv.apply_phase_oracle(state, set()).amplitudes, state.amplitudes)


def test_phase_flip_everything_is_global_phase():
    state = sv.uniform_superposition(2)
    flipped = sv.apply_phase_oracle(state, range(4))
    np.testing.assert_array_equal(flipped.amplitudes, -state.amplitudes)
    np.testing.assert_array_equal(flipped.probabilities(), state.probabilities())


def test_marked_forms_agree():
    mask = np.array([False, True, False, True])
    by_set = sv.marked_mask({1, 3}, 4)
    by_pred = sv.marked_mask(lambda x: x % 2 == 1, 4)
    np.testing.assert_array_equal(by_set, mask)
    np.testing.assert_array_equal(by_pred, mask)
    np.testing.assert_array_equal(sv.marked_mask(mask, 4), mask)


def test_marked_index_out_of_range():
    with pytest.raises(IndexError):
        sv.marked_mask([4], 4)


def test_inversion_fixed_point():
    for m in (1, 4, 7):
        state = sv.uniform_superposition(m)
        np.testing.assert_allclose(sv.invert_about_mean(state).amplitudes, state.amplitudes, atol=1e-15)


def test_inversion_hand_example():
    state = sv.StateVector(2, [0.5, 0.5, 0.5, -0.5])
    np.testing.assert_allclose(sv.invert_about_mean(state).amplitudes, [0, 0, 0, 1], atol=1e-15)


def test_inversion_is_involution():
    rng = np.random.default_rng(3)
    amps = rng.normal(size=16) + 1j * rng.normal(size=16)
    state = sv.StateVector(4, amps / np.linalg.norm(amps))
    twice = sv.invert_about_mean(sv.invert_about_mean(state))
    np.testing.assert_allclose(twice.amplitudes, state.amplitudes, atol=1e-12)


def test_one_iterate_quarter_marked_is_certain():
    state = sv.grover_iterate(sv.uniform_superposition(2), {2})
    assert abs(state.amplitudes[2] - 1.0) < 1e-12
    assert sv.marked_probability(state, {2}) == pytest.approx(1.0, abs=1e-12)


def test_two_iterates_on_eight_states():
    expected = exact_marked_probability(8, {5}, 2)
    assert expected == Fraction(121, 128)  # 0.9453125
    state = sv.run_iterations(sv.uniform_superposition(3), {5}, 2)
    assert sv.marked_probability(state, {5}) == pytest.approx(float(expected), abs=1e-12)
    assert float(expected) == pytest.approx(math.sin(5 * math.asin(1 / math.sqrt(8))) ** 2, abs=1e-12)


def test_iterate_without_marks_is_identity():
    state = sv.uniform_superposition(4)
    np.testing.assert_allclose(sv.grover_iterate(state, []).amplitudes, state.amplitudes, atol=1e-15)


@pytest.mark.parametrize(
    "n_total,k,expected",
    [(4, 1, 1), (2**30, 1, 25735), (8, 8, 0), (8, 1, 2), (512, 1, 17), (4, 3, 1), (16, 4, 1)],
)
def test_optimal_iteration_count(n_total, k, expected):
    assert sv.optimal_iteration_count(n_total, k) == expected


def test_optimal_iteration_count_no_solution():
    with pytest.raises(NoSolutionError):
        sv.optimal_iteration_count(8, 0)
    with pytest.raises(ValueError):
        sv.optimal_iteration_count(8, 9)


def test_measure_deterministic_state():
    state = sv.StateVector(2, [0, 0, 1, 0])
    assert {sv.measure(state, seed) for seed in range(50)} == {2}


def test_measure_same_seed_same_outcome():
    state = sv.run_iterations(sv.uniform_superposition(5), {7}, 1)
    assert sv.measure(state, 1234) == sv.measure(state, 1234)


def test_uniform_sampling_statistics():
    # per-index 5-sigma bands on 2**20 bins with ~1 expected hit each would fail
    # hundreds of bins by chance, so check the aggregate chi-square instead
    m, shots = 20, 10**6
    counts = np.bincount(sv.sample(sv.uniform_superposition(m), shots, seed=7), minlength=2**m)
    expected = shots / 2**m
    chi2 = float(np.sum((counts - expected) ** 2) / expected)
    dof = 2**m - 1
    assert abs(chi2 - dof) < 5 * math.sqrt(2 * dof)
    assert counts.sum() == shots


def test_decompose_examples():
    d = sv.decompose(2, 1)
    assert d.amp_good == 0.5
    assert d.amp_bad == pytest.approx(math.sqrt(3) / 2, abs=1e-15)
    assert sv.decompose(5, 0).amp_good == 0 and sv.decompose(5, 0).amp_bad == 1 and sv.decompose(5, 0).theta == 0
    assert sv.decompose(1, 1).theta == pytest.approx(math.pi / 4, abs=1e-15)
    assert sv.decompose(3, 8).theta == math.pi / 2


@given(st.integers(1, 16).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, 2**m))))
def test_decompose_unit_length(mk):
    m, k = mk
    d = sv.decompose(m, k)
    assert abs(d.amp_good**2 + d.amp_bad**2 - 1) < 1e-12
    if k < 2**m:
        assert d.theta == pytest.approx(math.atan(d.amp_good / d.amp_bad), abs=1e-15)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, 2**m), st.integers(0, 12), st.randoms())))
def test_closed_form_equivalence(args):
    m, k, j, rnd = args
    n_total = 2**m
    marked = set(rnd.sample(range(n_total), k))
    state = sv.run_iterations(sv.uniform_superposition(m), marked, j)
    expected = math.sin((2 * j + 1) * math.asin(math.sqrt(k / n_total))) ** 2
    assert abs(sv.marked_probability(state, marked) - expected) < 1e-9
    assert abs(state.norm_squared() - 1) < 1e-10


@given(st.integers(1, 12), st.randoms())
def test_oracle_involution(m, rnd):
    marked = {x for x in range(2**m) if rnd.random() < 0.3}
    state = sv.run_iterations(sv.uniform_superposition(m), {0}, 1)
    back = sv.apply_phase_oracle(sv.apply_phase_oracle(state, marked), marked)
    assert np.max(np.abs(back.amplitudes - state.amplitudes)) <= 1e-15


@pytest.mark.parametrize("m,k", [(3, 1), (6, 1), (8, 3), (10, 1), (12, 5)])
def test_unmarked_probability_decreases(m, k):
    marked = set(range(k))
    state = sv.uniform_superposition(m)
    unmarked = [1 - sv.marked_probability(state, marked)]
    for _ in range(sv.optimal_iteration_count(2**m, k)):
        state = sv.grover_iterate(state, marked)
        unmarked.append(1 - sv.marked_probability(state, marked))
    assert all(b < a for a, b in zip(unmarked, unmarked[1:]))


def test_closed_form_helper_matches_exact():
    assert sv.closed_form_success(8, 1, 2) == pytest.approx(121 / 128, abs=1e-12)
