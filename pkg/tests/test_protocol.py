"""Teleportation sessions: branch keys, correction tables, joint states, fidelity."""
import math
from itertools import product

import numpy as np
import pytest

from wteleport.circuits import WParams, w3_coefficients, w4_coefficients
from wteleport.protocol import (CorrectionKey, CorrectionOps, Mailbox,
                                all_correction_keys, as_correction_key,
                                correction_table_w3, correction_table_w4,
                                derive_correction_oracle, joint_states_w3,
                                joint_states_w4, run_bidirectional,
                                run_teleport_w3, run_teleport_w4)

FID_TOL = 1e-10

# Frozen expansions of the six-qubit joint states, kept separate from the
# module's own tables on purpose: (coefficient index, basis label), weight
# 1/2 each. First each pair is the state tensored with the channel, then the
# state after the sender's two CNOTs.
JOINT3 = (
    (0, "000000"), (0, "000101"), (0, "001010"), (0, "001111"),
    (1, "100000"), (1, "100101"), (1, "101010"), (1, "101111"),
    (2, "110000"), (2, "110101"), (2, "111010"), (2, "111111"),
)
COUPLED3 = (
    (0, "000000"), (0, "000101"), (0, "001010"), (0, "001111"),
    (1, "101000"), (1, "101101"), (1, "100010"), (1, "100111"),
    (2, "111100"), (2, "111001"), (2, "110110"), (2, "110011"),
)
JOINT4 = (
    (0, "000000"), (0, "000101"), (0, "001010"), (0, "001111"),
    (1, "010000"), (1, "010101"), (1, "011010"), (1, "011111"),
    (2, "100000"), (2, "100101"), (2, "101010"), (2, "101111"),
    (3, "110000"), (3, "110101"), (3, "111010"), (3, "111111"),
)
COUPLED4 = (
    (0, "000000"), (0, "000101"), (0, "001010"), (0, "001111"),
    (1, "010100"), (1, "010001"), (1, "011110"), (1, "011011"),
    (2, "101000"), (2, "101101"), (2, "100010"), (2, "100111"),
    (3, "111100"), (3, "111001"), (3, "110110"), (3, "110011"),
)


def _expand(coeffs, rows):
    vec = np.zeros(64, dtype=complex)
    for ci, label in rows:
        vec[int(label, 2)] = coeffs[ci] / 2.0
    return vec


def test_key_text_round_trip():
    for key in all_correction_keys():
        assert CorrectionKey.from_text(key.text) == key


def test_key_parsing_rejects_malformed_text():
    for bad in ("++0", "ab01", "+-2-", "+-012"):
        with pytest.raises(ValueError):
            CorrectionKey.from_text(bad)
    with pytest.raises(TypeError):
        as_correction_key(7)


def test_sixteen_keys_in_table_order():
    keys = all_correction_keys()
    assert len(keys) == 16
    assert keys[0].text == "++00"
    assert keys[1].text == "++01"
    assert keys[4].text == "+-00"
    assert keys[-1].text == "--11"


def test_identity_branch_needs_no_correction():
    ops = correction_table_w3("++00")
    assert ops.z_part == ("I", "I") and ops.x_part == ("I", "I")


@pytest.mark.parametrize("key, z, x", [
    ("--10", ("Z", "Z"), ("X", "I")),
    ("+-01", ("I", "Z"), ("I", "X")),
])
def test_w3_table_rows(key, z, x):
    ops = correction_table_w3(key)
    assert ops.z_part == z and ops.x_part == x


@pytest.mark.parametrize("key, z, x", [
    ("-+11", ("Z", "I"), ("X", "X")),
    ("+-10", ("I", "Z"), ("X", "I")),
])
def test_w4_table_rows(key, z, x):
    ops = correction_table_w4(key)
    assert ops.z_part == z and ops.x_part == x


def test_tables_follow_the_result_to_pauli_rule():
    # each '-' X result puts a Z on the matching receiver qubit and each
    # Z result 1 puts an X there
    for key in all_correction_keys():
        want_z = tuple("Z" if b else "I" for b in key.x_results)
        want_x = tuple("X" if b else "I" for b in key.z_results)
        for table in (correction_table_w3, correction_table_w4):
            ops = table(key)
            assert ops.z_part == want_z and ops.x_part == want_x


def test_correction_ops_validate_pauli_letters():
    with pytest.raises(ValueError):
        CorrectionOps(("X", "I"), ("I", "I"))
    with pytest.raises(ValueError):
        CorrectionOps(("I", "I"), ("Z", "I"))


def test_oracle_agrees_with_tables_on_spot_branches():
    for key in ("++00", "-+10", "--11"):
        assert derive_correction_oracle("w3", key) == correction_table_w3(key)
        assert derive_correction_oracle("w4", key) == correction_table_w4(key)


def test_oracle_rejects_unknown_protocol():
    with pytest.raises(ValueError):
        derive_correction_oracle("ghz", "++00")


def test_joint_states_w3_match_frozen_expansion():
    rng = np.random.default_rng(11)
    for _ in range(10):
        p = WParams.random(rng)
        joint, coupled = joint_states_w3(p)
        a = w3_coefficients(p)
        assert np.allclose(joint.amps, _expand(a, JOINT3), atol=1e-10)
        assert np.allclose(coupled.amps, _expand(a, COUPLED3), atol=1e-10)


def test_joint_states_w4_match_frozen_expansion():
    rng = np.random.default_rng(12)
    for _ in range(10):
        p = WParams.random(rng)
        joint, coupled = joint_states_w4(p)
        b = w4_coefficients(p)
        assert np.allclose(joint.amps, _expand(b, JOINT4), atol=1e-10)
        assert np.allclose(coupled.amps, _expand(b, COUPLED4), atol=1e-10)


def test_teleport3_succeeds_on_every_branch():
    p = WParams(1.37, 0.62, 2.18, 4.05)
    for key in all_correction_keys():
        t = run_teleport_w3(p, branch=key)
        assert t.final_fidelities[0] >= 1.0 - FID_TOL, key.text


def test_teleport4_succeeds_on_every_branch():
    p = WParams(0.81, 2.74, 1.93, 5.5)
    for key in all_correction_keys():
        t = run_teleport_w4(p, branch=key)
        assert t.final_fidelities[0] >= 1.0 - FID_TOL, key.text


def test_teleport3_equal_weight_identity_branch():
    p = WParams(2.0 * math.acos(1.0 / math.sqrt(3.0)), math.pi, math.pi / 2.0, math.pi)
    t = run_teleport_w3(p, branch="++00")
    assert t.final_fidelities[0] >= 1.0 - FID_TOL


def test_teleport_succeeds_with_single_term_state():
    # theta0 = 0 collapses the state onto one ket; every branch must still work
    p = WParams(0.0, 0.0, 0.0, 0.0)
    for key in all_correction_keys():
        assert run_teleport_w3(p, branch=key).final_fidelities[0] >= 1.0 - FID_TOL
        assert run_teleport_w4(p, branch=key).final_fidelities[0] >= 1.0 - FID_TOL


def test_branches_are_uniformly_likely():
    p = WParams(1.1, 0.3, 2.3, 1.9)
    for key in all_correction_keys():
        leg = run_teleport_w3(p, branch=key).legs[0]
        joint = np.prod([o.probability for o in leg.outcomes])
        assert joint == pytest.approx(1.0 / 16.0, abs=1e-12)


def test_sampled_sessions_are_seed_deterministic():
    p = WParams(1.9, 4.2, 0.77, 2.6)
    first = run_teleport_w3(p, rng_seed=99)
    second = run_teleport_w3(p, rng_seed=99)
    assert first.legs[0].key == second.legs[0].key
    assert first.final_fidelities == second.final_fidelities
    assert first.ok


def test_transcript_records_the_session():
    p = WParams(1.0, 2.0, 3.0, 0.5)
    t = run_teleport_w3(p, branch="-+01")
    leg = t.legs[0]
    assert t.direction == "A->B"
    assert leg.classical_bits_sent == 4
    assert leg.key.text == "-+01"
    assert [o.basis for o in leg.outcomes] == ["X", "X", "Z", "Z"]
    assert leg.correction == correction_table_w3("-+01")
    assert (leg.data_qubits, leg.channel_qubits, leg.ancilla_qubits) == (3, 4, 1)
    doc = t.to_dict()
    assert doc["schema"] == 1
    assert doc["classical_bits_total"] == 4
    assert doc["legs"][0]["key"] == "-+01"
    assert doc["ok"] is True


def test_teleport4_transcript_resources():
    leg = run_teleport_w4(WParams(1.0, 0.0, 1.0, 0.0), branch="++11").legs[0]
    assert (leg.data_qubits, leg.channel_qubits, leg.ancilla_qubits) == (4, 4, 2)


def test_bidirectional_restores_both_states():
    pa = WParams(1.21, 0.4, 2.6, 3.7)
    pb = WParams(0.66, 5.1, 1.45, 2.02)
    keys = all_correction_keys()
    for ka, kb in [(keys[0], keys[0]), (keys[5], keys[10]), (keys[15], keys[3]),
                   (keys[9], keys[15]), (keys[2], keys[7])]:
        t = run_bidirectional(pa, pb, branches=(ka, kb))
        assert t.direction == "bidirectional"
        assert all(f >= 1.0 - FID_TOL for f in t.final_fidelities), (ka.text, kb.text)


def test_bidirectional_counts_four_bits_per_direction():
    t = run_bidirectional(WParams(1.0, 1.0, 1.0, 1.0), WParams(2.0, 2.0, 2.0, 2.0),
                          branches=("++00", "--11"))
    assert [leg.classical_bits_sent for leg in t.legs] == [4, 4]
    assert t.classical_bits_total == 8


def test_bidirectional_uses_one_fresh_ancilla_in_total():
    t = run_bidirectional(WParams(1.0, 1.0, 1.0, 1.0), WParams(2.0, 2.0, 2.0, 2.0),
                          branches=("+-10", "-+01"))
    assert sum(leg.ancilla_qubits for leg in t.legs) == 1
    assert sum(leg.channel_qubits for leg in t.legs) == 8
    assert sum(leg.data_qubits for leg in t.legs) == 7


def test_corrections_depend_only_on_the_other_sides_results():
    pa = WParams(0.9, 0.1, 1.8, 2.5)
    pb = WParams(2.2, 3.3, 0.6, 1.4)
    keys = all_correction_keys()
    fixed_a = keys[6]
    bob_choices = {run_bidirectional(pa, pb, branches=(fixed_a, kb)).legs[0].correction
                   for kb in keys[:8]}
    assert len(bob_choices) == 1
    fixed_b = keys[11]
    alice_choices = {run_bidirectional(pa, pb, branches=(ka, fixed_b)).legs[1].correction
                     for ka in keys[:8]}
    assert len(alice_choices) == 1


def test_bidirectional_sampled_mode_is_deterministic():
    pa, pb = WParams(1.3, 0.2, 0.9, 4.4), WParams(0.5, 2.9, 2.2, 0.1)
    first = run_bidirectional(pa, pb, rng_seed=17)
    second = run_bidirectional(pa, pb, rng_seed=17)
    assert [l.key for l in first.legs] == [l.key for l in second.legs]
    assert first.ok and second.ok


def test_mailbox_counts_bits_and_drains():
    box = Mailbox("test")
    box.send(CorrectionKey.from_text("+-01"))
    assert box.bits_sent == 4
    assert box.receive().text == "+-01"
    with pytest.raises(RuntimeError):
        box.receive()


def test_branch_pairs_cover_the_full_product_space():
    keys = all_correction_keys()
    assert len(list(product(keys, keys))) == 256
