"""W-state teleportation simulator: generation, transfer, bidirectional exchange."""

from .circuits import (Circuit, WParams, apply_circuit, build_channel,
                       build_postprocess3, build_postprocess4,
                       build_preprocess3, build_preprocess4, build_w3_generator,
                       build_w4_generator, channel_state, w3_closed_form,
                       w3_coefficients, w4_closed_form, w4_coefficients)
from .efficiency import EfficiencyRecord, comparison_table, eta, percent_text
from .gates import GateOp, cnot, cry, h, matrix_of, ry, rz, toffoli, x
from .protocol import (CorrectionKey, CorrectionOps, Transcript,
                       all_correction_keys, correction_table_w3,
                       correction_table_w4, derive_correction_oracle,
                       run_bidirectional, run_teleport_w3, run_teleport_w4)
from .statevector import (MeasurementOutcome, StateVector, apply_gate, fidelity,
                          measure, new_zero_state, state_dump, tensor)

__all__ = [
    "Circuit", "CorrectionKey", "CorrectionOps", "EfficiencyRecord", "GateOp",
    "MeasurementOutcome", "StateVector", "Transcript", "all_correction_keys",
    "apply_circuit", "apply_gate", "build_channel", "build_postprocess3",
    "build_postprocess4", "build_preprocess3", "build_preprocess4",
    "build_w3_generator", "build_w4_generator", "channel_state", "cnot",
    "comparison_table", "correction_table_w3", "correction_table_w4", "cry",
    "derive_correction_oracle", "eta", "fidelity", "h", "matrix_of", "measure",
    "new_zero_state", "percent_text", "run_bidirectional", "run_teleport_w3",
    "run_teleport_w4",
    "rz", "ry", "state_dump", "tensor", "toffoli", "w3_closed_form",
    "w3_coefficients", "w4_closed_form", "w4_coefficients", "WParams", "x",
]

__version__ = "0.1.0"
