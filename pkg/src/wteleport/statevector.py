"""Dense state-vector simulation for registers of up to 20 qubits.

Ordering is big-endian with qubit 0 as the leftmost ket symbol: basis index
k stores qubit q in bit (num_qubits - 1 - q), so |100> on three qubits is
index 4. Operations never mutate their inputs; every function returns a new
StateVector whose norm is checked on construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gates import GateOp, h, target_matrix

NORM_TOL = 1e-12
MAX_QUBITS = 20


@dataclass(frozen=True, eq=False)
class StateVector:
    num_qubits: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        if not 1 <= self.num_qubits <= MAX_QUBITS:
            raise ValueError(f"num_qubits must be in 1..{MAX_QUBITS}, got {self.num_qubits}")
        if self.amps.shape != (2 ** self.num_qubits,):
            raise ValueError(f"expected {2 ** self.num_qubits} amplitudes, got shape {self.amps.shape}")
        norm = float(np.vdot(self.amps, self.amps).real)
        if not math.isfinite(norm) or abs(norm - 1.0) > 1e-9:
            raise ValueError(f"state norm^2 is {norm}, not 1")


def new_zero_state(num_qubits: int) -> StateVector:
    """|00...0> on the requested number of qubits."""
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise ValueError(f"num_qubits must be in 1..{MAX_QUBITS}, got {num_qubits}")
    amps = np.zeros(2 ** num_qubits, dtype=complex)
    amps[0] = 1.0
    return StateVector(num_qubits, amps)


def from_amplitudes(amps, *, normalize: bool = False) -> StateVector:
    """Wrap an explicit amplitude list; length must be a power of two."""
    arr = np.asarray(amps, dtype=complex).reshape(-1)
    n = int(math.log2(arr.size))
    if 2 ** n != arr.size:
        raise ValueError(f"amplitude count {arr.size} is not a power of two")
    if normalize:
        arr = arr / np.linalg.norm(arr)
    return StateVector(n, arr)


def apply_gate(state: StateVector, gate: GateOp) -> StateVector:
    """Apply one gate, rotating the target axis inside the all-controls-one block."""
    n = state.num_qubits
    for q in gate.qubits:
        if q >= n:
            raise ValueError(f"gate touches qubit {q} but register has {n}")
    u = target_matrix(gate)
    target = gate.targets[0]
    psi = state.amps.reshape((2,) * n)
    if not gate.controls:
        out = np.moveaxis(np.tensordot(u, psi, axes=([1], [target])), 0, target)
        return StateVector(n, out.reshape(-1).copy())
    psi = psi.copy()
    sel: list = [slice(None)] * n
    for c in gate.controls:
        sel[c] = 1
    sub = psi[tuple(sel)]
    axis = target - sum(1 for c in gate.controls if c < target)
    moved = np.moveaxis(sub, axis, -1)
    moved[...] = moved @ u.T
    return StateVector(n, psi.reshape(-1))


@dataclass(frozen=True)
class MeasurementOutcome:
    """Result of measuring one qubit: which qubit, in which basis, what came out."""

    qubit: int
    basis: str
    result: int
    probability: float

    @property
    def symbol(self) -> str:
        """'+'/'-' for X results, '0'/'1' for Z results."""
        if self.basis == "X":
            return "+" if self.result == 0 else "-"
        return str(self.result)


def measure(state: StateVector, qubit: int, basis: str = "Z", forced: int | None = None,
            rng=None) -> tuple[MeasurementOutcome, StateVector]:
    """Measure one qubit, collapsing the register.

    X-basis measurement is H followed by a Z measurement, reporting result 0
    as '+' and 1 as '-'; the measured qubit is left in |result>. `forced`
    selects a branch deterministically and raises ValueError if that branch
    has probability below 1e-12. Otherwise the branch is sampled from the
    Born rule using `rng` (an integer seed or numpy Generator).
    """
    if basis not in ("Z", "X"):
        raise ValueError(f"basis must be 'Z' or 'X', got {basis!r}")
    if qubit >= state.num_qubits or qubit < 0:
        raise ValueError(f"qubit {qubit} out of range for {state.num_qubits}-qubit register")
    if basis == "X":
        state = apply_gate(state, h(qubit))
    n = state.num_qubits
    psi = state.amps.reshape((2,) * n)
    one_slice = np.moveaxis(psi, qubit, 0)[1]
    p1 = float(np.vdot(one_slice, one_slice).real)
    probs = (1.0 - p1, p1)
    if forced is not None:
        if forced not in (0, 1):
            raise ValueError(f"forced outcome must be 0 or 1, got {forced}")
        result = forced
        if probs[result] < 1e-12:
            raise ValueError(f"forced branch {result} on qubit {qubit} has probability {probs[result]:.3e}")
    else:
        gen = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
        result = int(gen.random() < p1)
    collapsed = psi.copy()
    np.moveaxis(collapsed, qubit, 0)[1 - result] = 0.0
    collapsed = collapsed.reshape(-1) / math.sqrt(probs[result])
    outcome = MeasurementOutcome(qubit, basis, result, probs[result])
    return outcome, StateVector(n, collapsed)


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2, insensitive to global phase."""
    if a.num_qubits != b.num_qubits:
        raise ValueError(f"fidelity needs equal sizes, got {a.num_qubits} and {b.num_qubits}")
    return float(abs(np.vdot(a.amps, b.amps)) ** 2)


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """a (x) b with a's qubits leftmost."""
    n = a.num_qubits + b.num_qubits
    if n > MAX_QUBITS:
        raise ValueError(f"tensor product would need {n} qubits, cap is {MAX_QUBITS}")
    return StateVector(n, np.kron(a.amps, b.amps))


def permute_qubits(state: StateVector, order) -> StateVector:
    """Reorder qubits so new position i holds the qubit order[i]."""
    order = list(order)
    if sorted(order) != list(range(state.num_qubits)):
        raise ValueError(f"order {order} is not a permutation of 0..{state.num_qubits - 1}")
    psi = state.amps.reshape((2,) * state.num_qubits).transpose(order).reshape(-1)
    return StateVector(state.num_qubits, psi.copy())


def probability_of_one(state: StateVector, qubit: int) -> float:
    """Marginal probability that the qubit reads 1 in the Z basis."""
    psi = state.amps.reshape((2,) * state.num_qubits)
    one_slice = np.moveaxis(psi, qubit, 0)[1]
    return float(np.vdot(one_slice, one_slice).real)


def extract_subsystem(state: StateVector, keep) -> StateVector:
    """Pull out the qubits in `keep` (in the given order) as their own state.

    Valid only when the kept block is in a product state with the rest of the
    register (collapsed or otherwise unentangled qubits); the result carries
    an arbitrary global phase.
    """
    keep = list(keep)
    rest = [q for q in range(state.num_qubits) if q not in keep]
    mat = (state.amps.reshape((2,) * state.num_qubits)
           .transpose(keep + rest)
           .reshape(2 ** len(keep), -1))
    weights = np.abs(mat) ** 2
    col = mat[:, int(np.argmax(weights.sum(axis=0)))]
    return StateVector(len(keep), col / np.linalg.norm(col))


def state_dump(state: StateVector) -> dict:
    """JSON-ready dump: amplitude [re, im] pairs plus the ordering convention."""
    return {
        "schema": 1,
        "num_qubits": state.num_qubits,
        "ordering": "big-endian-leftmost",
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amps],
    }
