"""Circuit builders for W-state generation, compression and reconstruction.

A three-particle W state with free coefficients,

    a0|100> + a1|010> + a2|001>,

is produced from |000> by two rotation layers and a CNOT cascade; the
four-particle analogue

    b0|0010> + b1|0100> + b2|1000> + b3|0001>

adds one more rotation pair and a Toffoli cascade. The builders negate the
polar angles so that the prepared one-qubit states read
cos(t/2)|0> - e^{i*phi} sin(t/2)|1>, which is where the minus signs in a1,
b1 and b2 come from.

Compression ("preprocess") maps either W state onto its first two qubits,
resetting the rest to |0>; reconstruction ("postprocess") is the exact
inverse, applied to a received two-qubit state plus fresh |0> qubits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gates import GateOp, cnot, cry, h, ry, rz, toffoli, x
from .statevector import StateVector, apply_gate, from_amplitudes, new_zero_state


@dataclass(frozen=True)
class WParams:
    """Two polar and two azimuthal angles, in radians; any finite values are legal."""

    theta0: float
    phi0: float
    theta1: float
    phi1: float

    def __post_init__(self) -> None:
        for name in ("theta0", "phi0", "theta1", "phi1"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @classmethod
    def random(cls, rng: np.random.Generator) -> "WParams":
        return cls(theta0=float(rng.uniform(0.0, math.pi)),
                   phi0=float(rng.uniform(0.0, 2.0 * math.pi)),
                   theta1=float(rng.uniform(0.0, math.pi)),
                   phi1=float(rng.uniform(0.0, 2.0 * math.pi)))


def w3_coefficients(p: WParams) -> np.ndarray:
    """Closed-form (a0, a1, a2) for the three-particle state."""
    half0, half1 = p.theta0 / 2.0, p.theta1 / 2.0
    return np.array([
        math.cos(half0),
        -np.exp(1j * p.phi0) * math.sin(half0) * math.cos(half1),
        np.exp(1j * (p.phi0 + p.phi1)) * math.sin(half0) * math.sin(half1),
    ])


def w4_coefficients(p: WParams) -> np.ndarray:
    """Closed-form (b0, b1, b2, b3) for the four-particle state."""
    half0, half1 = p.theta0 / 2.0, p.theta1 / 2.0
    return np.array([
        math.cos(half0) * math.cos(half1),
        -np.exp(1j * p.phi1) * math.cos(half0) * math.sin(half1),
        -np.exp(1j * p.phi0) * math.sin(half0) * math.cos(half1),
        np.exp(1j * (p.phi0 + p.phi1)) * math.sin(half0) * math.sin(half1),
    ])


def w3_closed_form(p: WParams) -> StateVector:
    """Three-qubit target state a0|100> + a1|010> + a2|001> built from the formulas."""
    a = w3_coefficients(p)
    amps = np.zeros(8, dtype=complex)
    amps[0b100], amps[0b010], amps[0b001] = a[0], a[1], a[2]
    return from_amplitudes(amps)


def w4_closed_form(p: WParams) -> StateVector:
    """Four-qubit target state b0|0010> + b1|0100> + b2|1000> + b3|0001>."""
    b = w4_coefficients(p)
    amps = np.zeros(16, dtype=complex)
    amps[0b0010], amps[0b0100], amps[0b1000], amps[0b0001] = b[0], b[1], b[2], b[3]
    return from_amplitudes(amps)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list on a register of fixed width."""

    num_qubits: int
    gates: tuple[GateOp, ...]

    def __post_init__(self) -> None:
        for g in self.gates:
            if any(q >= self.num_qubits for q in g.qubits):
                raise ValueError(f"gate {g} exceeds register width {self.num_qubits}")

    def __len__(self) -> int:
        return len(self.gates)

    def embed(self, qubits, num_qubits: int) -> "Circuit":
        """Same circuit with local qubit i remapped to qubits[i] inside a wider register."""
        qubits = list(qubits)
        if len(qubits) != self.num_qubits:
            raise ValueError(f"need {self.num_qubits} register positions, got {len(qubits)}")
        if len(set(qubits)) != len(qubits) or any(q >= num_qubits or q < 0 for q in qubits):
            raise ValueError(f"invalid embedding {qubits} into {num_qubits} qubits")
        remapped = tuple(
            GateOp(g.kind, g.params,
                   tuple(qubits[c] for c in g.controls),
                   tuple(qubits[t] for t in g.targets))
            for g in self.gates)
        return Circuit(num_qubits, remapped)

    def reversed_gates(self) -> "Circuit":
        """Gate list in reverse order; inverts the circuit when every gate is self-inverse."""
        for g in self.gates:
            if g.kind not in ("X", "CNOT", "TOFFOLI", "H"):
                raise ValueError(f"{g.kind} is not self-inverse; cannot invert by reversal")
        return Circuit(self.num_qubits, tuple(reversed(self.gates)))

    def to_records(self) -> list[dict]:
        return [{"kind": g.kind, "params": list(g.params),
                 "controls": list(g.controls), "targets": list(g.targets)}
                for g in self.gates]

    def to_text(self) -> str:
        lines = []
        for g in self.gates:
            parts = [g.kind]
            if g.params:
                parts.append("params=" + repr(list(g.params)))
            if g.controls:
                parts.append("controls=" + repr(list(g.controls)))
            parts.append("targets=" + repr(list(g.targets)))
            lines.append(" ".join(parts))
        return "\n".join(lines)


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """Run every gate in order; register must be at least as wide as the circuit."""
    if state.num_qubits < circuit.num_qubits:
        raise ValueError(f"register has {state.num_qubits} qubits, circuit needs {circuit.num_qubits}")
    for g in circuit.gates:
        state = apply_gate(state, g)
    return state


def build_w3_generator(p: WParams) -> Circuit:
    """|000> -> a0|100> + a1|010> + a2|001> with the closed-form coefficients."""
    return Circuit(3, (
        ry(-p.theta0, 0), rz(p.phi0, 0),
        cry(-p.theta1, 0, 1), rz(p.phi1, 1),
        cnot(1, 2), cnot(0, 1), x(0),
    ))


def build_w4_generator(p: WParams) -> Circuit:
    """|0000> -> b0|0010> + b1|0100> + b2|1000> + b3|0001>.

    The two rotation pairs leave (b0, b1, b2, b3) spread over qubits 0 and 1;
    the tail is the reconstruction cascade, which carries that two-qubit
    pattern onto the four single-excitation kets.
    """
    init = (ry(-p.theta0, 0), rz(p.phi0, 0), ry(-p.theta1, 1), rz(p.phi1, 1))
    return Circuit(4, init + build_postprocess4().gates)


def build_preprocess3() -> Circuit:
    """Compress a0|100> + a1|010> + a2|001> to (a0|00> + a1|10> + a2|11>)|0>."""
    return Circuit(3, (x(0), cnot(0, 1), cnot(1, 2)))


def build_preprocess4() -> Circuit:
    """Compress the four-particle state to (b0|00> + b1|01> + b2|10> + b3|11>)|00>."""
    return Circuit(4, (
        cnot(3, 1), cnot(3, 0),
        toffoli(0, 1, 3),
        x(0), x(1),
        toffoli(0, 1, 2),
        x(0), x(1),
    ))


def build_postprocess3() -> Circuit:
    """Inverse of the three-particle compression; the received pair plus one |0> qubit
    becomes a0|100> + a1|010> + a2|001>. Reversing the gate order is what makes this
    an inverse; the gates themselves are self-inverse."""
    return build_preprocess3().reversed_gates()


def build_postprocess4() -> Circuit:
    """Inverse of the four-particle compression, acting on the received pair plus two |0> qubits."""
    return build_preprocess4().reversed_gates()


# The channel register is laid out block-wise, all sender-side qubits before
# all receiver-side qubits. Position k of the alternating per-pair listing
# (sender_0, receiver_0, sender_1, receiver_1) reads block position
# INTERLEAVED_PAIR_ORDER[k]; permuting by it regroups the two-pair channel
# into explicit Bell-pair factors.
INTERLEAVED_PAIR_ORDER: tuple[int, ...] = (0, 2, 1, 3)


def build_channel(pairs: int) -> Circuit:
    """Bell-pair channel on 2*pairs qubits: H on each sender qubit i, then CNOT(i -> pairs+i).

    Sender qubit i and receiver qubit pairs+i end up perfectly correlated; the
    joint state is sum_s |s>|s> / sqrt(2^pairs) over all pairs-bit strings s.
    """
    if pairs not in (1, 2, 4):
        raise ValueError(f"pairs must be 1, 2 or 4, got {pairs}")
    layers = tuple(h(i) for i in range(pairs)) + tuple(cnot(i, pairs + i) for i in range(pairs))
    return Circuit(2 * pairs, layers)


def channel_state(pairs: int) -> StateVector:
    """The shared channel state itself, built by running build_channel on zeros."""
    return apply_circuit(new_zero_state(2 * pairs), build_channel(pairs))
