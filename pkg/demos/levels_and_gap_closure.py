"""Energy levels three ways, then the collapse of the gap as the coupling grows.

Run with ``python3 demos/levels_and_gap_closure.py``. Nothing is written to
disk; the tables go to stdout.
"""

import numpy as np

from kgyukawa import PhysicalConfig, QuantumNumbers, energy_closed_form, energy_exact
from kgyukawa.oracle import BracketError, shoot_branch
from kgyukawa.spectrum import NoBoundStateError, critical_parameter

cfg = PhysicalConfig(alpha=0.01, eta=0.1)

# The closed form is an approximation to the exact quantization condition;
# the shooting solver integrates the same radial equation numerically.
print("n  l  closed form          exact root           shooting")
for n in range(3):
    for l in range(2):
        qn = QuantumNumbers(n, l)
        closed = energy_closed_form(qn, cfg).e_plus
        try:
            exact = f"{energy_exact(qn, cfg).value:.15f}"
        except NoBoundStateError:
            exact = "unbound"
        try:
            shot = f"{shoot_branch(qn, cfg).energy:.15f}"
        except BracketError:
            shot = "unbound"
        print(f"{n}  {l}  {closed.value:.15f}    {exact:<20} {shot}")

# With a position-dependent mass the two branches approach each other as eta
# grows and meet where the radicand of the closed form vanishes.
pdm = cfg.with_(m1=0.1)
qn = QuantumNumbers(1, 0)
eta_c = critical_parameter(qn, pdm, "eta", (0.1, 5.0))
print(f"\ncritical eta for {qn}: {eta_c:.12f}")
print("eta        E+          E-          gap")
for eta in np.linspace(0.5, eta_c, 8):
    pair = energy_closed_form(qn, pdm.with_(eta=eta))
    ep, em = pair.e_plus.value, pair.e_minus.value
    print(f"{eta:.6f}  {ep: .8f}  {em: .8f}  {ep - em:.3e}")
beyond = energy_closed_form(qn, pdm.with_(eta=eta_c * 1.01)).e_plus
print(f"just past the critical point the level is {beyond.status.value}")
