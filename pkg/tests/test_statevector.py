"""Register construction, gate application, measurement, and the small helpers."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wteleport.gates import cnot, h, ry, rz, toffoli, x
from wteleport.statevector import (StateVector, apply_gate, extract_subsystem,
                                   fidelity, from_amplitudes, measure,
                                   new_zero_state, permute_qubits,
                                   probability_of_one, state_dump, tensor)


def test_zero_state_single_qubit():
    s = new_zero_state(1)
    assert np.allclose(s.amps, [1, 0])


def test_zero_state_puts_all_weight_on_index_zero():
    s = new_zero_state(3)
    assert s.amps[0] == 1.0 and np.count_nonzero(s.amps) == 1


@pytest.mark.parametrize("n", [0, -2, 21])
def test_zero_state_rejects_bad_sizes(n):
    with pytest.raises(ValueError):
        new_zero_state(n)


def test_statevector_rejects_unnormalized_amplitudes():
    with pytest.raises(ValueError):
        StateVector(1, np.array([1.0, 1.0], dtype=complex))


def test_x_flips_leftmost_qubit():
    s = apply_gate(new_zero_state(3), x(0))
    assert np.isclose(s.amps[0b100], 1.0)  # big-endian: qubit 0 is the leftmost symbol


def test_cnot_on_basis_state():
    s = apply_gate(new_zero_state(2), x(0))
    s = apply_gate(s, cnot(0, 1))
    assert np.isclose(s.amps[0b11], 1.0)


def test_toffoli_fires_only_with_both_controls():
    s = apply_gate(apply_gate(new_zero_state(3), x(0)), toffoli(0, 1, 2))
    assert np.isclose(s.amps[0b100], 1.0)
    s = apply_gate(apply_gate(s, x(1)), toffoli(0, 1, 2))
    assert np.isclose(s.amps[0b111], 1.0)


def test_gate_rejects_out_of_range_qubit():
    with pytest.raises(ValueError):
        apply_gate(new_zero_state(2), x(2))


def test_gates_on_disjoint_qubits_commute():
    s0 = new_zero_state(3)
    a = apply_gate(apply_gate(s0, h(0)), ry(1.3, 2))
    b = apply_gate(apply_gate(s0, ry(1.3, 2)), h(0))
    assert np.allclose(a.amps, b.amps, atol=1e-12)


@settings(max_examples=40, derandomize=True, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_random_circuits_preserve_norm(seed):
    rng = np.random.default_rng(seed)
    state = new_zero_state(4)
    for _ in range(12):
        q = int(rng.integers(4))
        choice = int(rng.integers(4))
        if choice == 0:
            gate = h(q)
        elif choice == 1:
            gate = ry(float(rng.uniform(-6, 6)), q)
        elif choice == 2:
            gate = rz(float(rng.uniform(-6, 6)), q)
        else:
            gate = cnot(q, (q + 1) % 4)
        state = apply_gate(state, gate)
    assert abs(np.vdot(state.amps, state.amps).real - 1.0) < 1e-12


def test_measure_z_on_zero_state():
    out, post = measure(new_zero_state(2), 0)
    assert out.result == 0 and out.symbol == "0"
    assert np.isclose(out.probability, 1.0)
    assert np.allclose(post.amps, new_zero_state(2).amps)


def test_measure_x_reports_plus_on_plus_state():
    plus = apply_gate(new_zero_state(1), h(0))
    out, _ = measure(plus, 0, basis="X")
    assert out.symbol == "+" and np.isclose(out.probability, 1.0)


def test_measure_x_reports_minus_on_minus_state():
    minus = apply_gate(apply_gate(new_zero_state(1), x(0)), h(0))
    out, _ = measure(minus, 0, basis="X")
    assert out.symbol == "-" and out.result == 1


def test_forced_zero_probability_branch_raises():
    with pytest.raises(ValueError):
        measure(new_zero_state(2), 0, forced=1)


def test_forced_branch_probabilities_sum_to_one():
    rng = np.random.default_rng(5)
    for _ in range(20):
        amps = rng.normal(size=8) + 1j * rng.normal(size=8)
        state = from_amplitudes(amps, normalize=True)
        for q in range(3):
            for basis in ("Z", "X"):
                p0 = measure(state, q, basis, forced=0)[0].probability
                p1 = measure(state, q, basis, forced=1)[0].probability
                assert abs(p0 + p1 - 1.0) < 1e-12


def test_measure_collapses_the_qubit():
    state = apply_gate(new_zero_state(2), h(0))
    out, post = measure(state, 0, forced=1)
    assert np.isclose(out.probability, 0.5)
    assert probability_of_one(post, 0) == pytest.approx(1.0, abs=1e-12)


def test_sampled_measurement_is_seed_deterministic():
    state = apply_gate(new_zero_state(1), h(0))
    results = {measure(state, 0, rng=123)[0].result for _ in range(5)}
    assert len(results) == 1


def test_measure_rejects_unknown_basis():
    with pytest.raises(ValueError):
        measure(new_zero_state(1), 0, basis="Y")


def test_fidelity_of_identical_states_is_one():
    s = apply_gate(new_zero_state(2), h(0))
    assert fidelity(s, s) == pytest.approx(1.0, abs=1e-12)


def test_fidelity_of_orthogonal_states_is_zero():
    a, b = new_zero_state(1), apply_gate(new_zero_state(1), x(0))
    assert fidelity(a, b) == pytest.approx(0.0, abs=1e-12)


def test_fidelity_ignores_global_phase():
    s = apply_gate(new_zero_state(2), h(0))
    rotated = StateVector(2, s.amps * np.exp(0.9j))
    assert fidelity(s, rotated) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=30, derandomize=True, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_fidelity_is_symmetric_and_bounded(seed):
    rng = np.random.default_rng(seed)
    a = from_amplitudes(rng.normal(size=4) + 1j * rng.normal(size=4), normalize=True)
    b = from_amplitudes(rng.normal(size=4) + 1j * rng.normal(size=4), normalize=True)
    assert fidelity(a, b) == pytest.approx(fidelity(b, a), abs=1e-12)
    assert -1e-12 <= fidelity(a, b) <= 1.0 + 1e-12


def test_fidelity_rejects_size_mismatch():
    with pytest.raises(ValueError):
        fidelity(new_zero_state(1), new_zero_state(2))


def test_tensor_concatenates_big_endian():
    one = apply_gate(new_zero_state(1), x(0))
    s = tensor(new_zero_state(1), one)
    assert np.isclose(s.amps[0b01], 1.0)


def test_tensor_rejects_oversized_product():
    with pytest.raises(ValueError):
        tensor(new_zero_state(12), new_zero_state(12))


def test_permute_qubits_swaps_amplitudes():
    s = apply_gate(new_zero_state(2), x(0))  # |10>
    swapped = permute_qubits(s, [1, 0])
    assert np.isclose(swapped.amps[0b01], 1.0)


def test_permute_round_trip():
    rng = np.random.default_rng(9)
    s = from_amplitudes(rng.normal(size=16) + 1j * rng.normal(size=16), normalize=True)
    order = [2, 0, 3, 1]
    inverse = [order.index(i) for i in range(4)]
    back = permute_qubits(permute_qubits(s, order), inverse)
    assert np.allclose(back.amps, s.amps, atol=1e-12)


def test_permute_rejects_non_permutation():
    with pytest.raises(ValueError):
        permute_qubits(new_zero_state(2), [0, 0])


def test_extract_subsystem_of_product_state():
    inner = apply_gate(apply_gate(new_zero_state(2), h(0)), cnot(0, 1))
    padded = tensor(apply_gate(new_zero_state(1), x(0)), inner)
    got = extract_subsystem(padded, [1, 2])
    assert fidelity(got, inner) == pytest.approx(1.0, abs=1e-12)


def test_extract_subsystem_respects_requested_order():
    s = tensor(new_zero_state(1), apply_gate(new_zero_state(1), x(0)))  # |01>
    got = extract_subsystem(s, [1, 0])
    assert np.isclose(got.amps[0b10], 1.0)


def test_state_dump_layout():
    dump = state_dump(apply_gate(new_zero_state(2), x(1)))
    assert dump["schema"] == 1
    assert dump["num_qubits"] == 2
    assert dump["ordering"] == "big-endian-leftmost"
    assert dump["amplitudes"][0b01] == [1.0, 0.0]
    assert len(dump["amplitudes"]) == 4


def test_from_amplitudes_rejects_non_power_of_two():
    with pytest.raises(ValueError):
        from_amplitudes(np.ones(3))
