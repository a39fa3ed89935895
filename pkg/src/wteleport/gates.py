"""Gate vocabulary: X, H, CNOT, Toffoli, Ry, Rz and controlled-Ry.

Rz is the phase-gate form diag(1, e^{i*phi}), so phases attach to the |1>
amplitude only. Ry is the standard real rotation with half-angle entries.
Every gate reduces to a 2x2 matrix on one target qubit plus zero, one or
two control qubits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# kind -> (number of controls, number of angle params)
_ARITY = {
    "X": (0, 0),
    "H": (0, 0),
    "CNOT": (1, 0),
    "TOFFOLI": (2, 0),
    "RY": (0, 1),
    "RZ": (0, 1),
    "CRY": (1, 1),
}

_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_H = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / math.sqrt(2.0)


def _ry_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _rz_matrix(phi: float) -> np.ndarray:
    return np.array([[1.0, 0.0], [0.0, np.exp(1j * phi)]], dtype=complex)


@dataclass(frozen=True)
class GateOp:
    """One gate instance bound to explicit control/target qubit indices."""

    kind: str
    params: tuple[float, ...] = ()
    controls: tuple[int, ...] = ()
    targets: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in _ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        n_ctrl, n_par = _ARITY[self.kind]
        if len(self.controls) != n_ctrl:
            raise ValueError(f"{self.kind} takes {n_ctrl} control(s), got {len(self.controls)}")
        if len(self.targets) != 1:
            raise ValueError(f"{self.kind} takes exactly one target")
        if len(self.params) != n_par:
            raise ValueError(f"{self.kind} takes {n_par} angle parameter(s)")
        qubits = self.controls + self.targets
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"duplicate qubit index in {qubits}")
        if any(q < 0 for q in qubits):
            raise ValueError(f"negative qubit index in {qubits}")
        if any(not math.isfinite(p) for p in self.params):
            raise ValueError(f"gate angles must be finite, got {self.params}")

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + self.targets


def x(target: int) -> GateOp:
    return GateOp("X", targets=(target,))


def h(target: int) -> GateOp:
    return GateOp("H", targets=(target,))


def cnot(control: int, target: int) -> GateOp:
    return GateOp("CNOT", controls=(control,), targets=(target,))


def toffoli(control_a: int, control_b: int, target: int) -> GateOp:
    return GateOp("TOFFOLI", controls=(control_a, control_b), targets=(target,))


def ry(theta: float, target: int) -> GateOp:
    return GateOp("RY", params=(float(theta),), targets=(target,))


def rz(phi: float, target: int) -> GateOp:
    return GateOp("RZ", params=(float(phi),), targets=(target,))


def cry(theta: float, control: int, target: int) -> GateOp:
    return GateOp("CRY", params=(float(theta),), controls=(control,), targets=(target,))


def target_matrix(gate: GateOp) -> np.ndarray:
    """2x2 matrix the gate applies on its target (controls handled separately)."""
    if gate.kind in ("X", "CNOT", "TOFFOLI"):
        return _X
    if gate.kind == "H":
        return _H
    if gate.kind == "RY":
        return _ry_matrix(gate.params[0])
    if gate.kind == "CRY":
        return _ry_matrix(gate.params[0])
    return _rz_matrix(gate.params[0])


def matrix_of(gate: GateOp) -> np.ndarray:
    """Full unitary on the gate's own qubits, controls as the leading (leftmost) qubits.

    A k-control gate gives a 2^(k+1) matrix that is the identity except for
    the 2x2 target block in the all-controls-one corner.
    """
    dim = 2 ** (len(gate.controls) + 1)
    u = np.eye(dim, dtype=complex)
    u[dim - 2:, dim - 2:] = target_matrix(gate)
    return u
