"""
Generating W states with arbitrary coefficients
================================================

A W state spreads one excitation across every particle. The three-particle
form used here is

    a0|100> + a1|010> + a2|001>

and the coefficients are set by four angles: two polar (theta0, theta1) and
two phase (phi0, phi1). This script builds the generator circuits, runs them
on |0...0>, and checks the amplitudes against the closed-form expressions.
"""
import numpy as np

from wteleport import (WParams, apply_circuit, build_w3_generator,
                       build_w4_generator, new_zero_state, w3_closed_form,
                       w3_coefficients, w4_closed_form, w4_coefficients)

# An angle choice that makes all three weights equal: |a0| = |a1| = |a2|.
equal = WParams(theta0=2.0 * np.arccos(1.0 / np.sqrt(3.0)), phi0=np.pi,
                theta1=np.pi / 2.0, phi1=np.pi)

circuit = build_w3_generator(equal)
print("three-particle generator:")
print(circuit.to_text())
print()

state = apply_circuit(new_zero_state(3), circuit)
print("amplitudes on the one-excitation kets:")
for label in ("100", "010", "001"):
    amp = state.amps[int(label, 2)]
    print(f"  |{label}>  {amp:+.9f}")
print(f"  1/sqrt(3) = {1.0 / np.sqrt(3.0):.9f}")
print()

# The same four angles drive the four-particle generator. Its basis kets are
# |0010>, |0100>, |1000>, |0001> with coefficients b0..b3.
rng = np.random.default_rng(7)
params = WParams.random(rng)
state4 = apply_circuit(new_zero_state(4), build_w4_generator(params))
target4 = w4_closed_form(params)
print(f"random draw: {params}")
print("four-particle circuit vs closed form:")
for label, coeff in zip(("0010", "0100", "1000", "0001"), w4_coefficients(params)):
    amp = state4.amps[int(label, 2)]
    print(f"  |{label}>  circuit {amp:+.9f}   closed {coeff:+.9f}")
err = np.max(np.abs(state4.amps - target4.amps))
print(f"max elementwise error: {err:.3e}")

# Same comparison for the three-particle state, across many random draws.
worst = 0.0
for _ in range(100):
    p = WParams.random(rng)
    s = apply_circuit(new_zero_state(3), build_w3_generator(p))
    worst = max(worst, float(np.max(np.abs(s.amps - w3_closed_form(p).amps))))
print(f"worst error over 100 three-particle draws: {worst:.3e}")
