"""
Counting the cost: transmission efficiency
==========================================

A teleportation scheme's efficiency is the ratio of qubits delivered to
resources burned:

    eta = q_s / (q_u + b_t + q_a)

where q_s counts transmitted qubits, q_u channel qubits, b_t classical bits
and q_a ancillas. Compressing a W state before teleporting it pays off
directly here: the three-particle protocol moves 3 qubits for a cost of
4 + 4 + 1 = 9, where channel-per-qubit schemes would pay more.

The arithmetic is exact rational, and the percentage column truncates to
one decimal place rather than rounding (3/16 prints as 18.7, 7/17 as 41.1).
"""
from fractions import Fraction

from wteleport import WParams, comparison_table, eta, percent_text, run_teleport_w3

# The ratio for the three-particle protocol, from first principles.
value = eta(transmitted_qubits=3, channel_qubits=4, classical_bits=4,
            ancilla_qubits=1)
print(f"three-particle protocol: eta = {value} = {percent_text(value)}%")
assert value == Fraction(1, 3)

# The same counts, read straight off a session transcript.
leg = run_teleport_w3(WParams(1.0, 2.0, 0.5, 3.0), branch="++00").legs[0]
check = eta(leg.data_qubits, leg.channel_qubits, leg.classical_bits_sent,
            leg.ancilla_qubits)
print(f"from a live transcript:  eta = {check}")
print()

# The full comparison. The first four rows are other published schemes;
# the last three are the protocols in this package.
print(f"{'scheme':<58} {'ratio':>6} {'pct':>6}")
for row in comparison_table():
    print(f"{row.label:<58} {row.fraction_text:>6} {row.percent:>6}")
    if row.note:
        print(f"    note: {row.note}")
