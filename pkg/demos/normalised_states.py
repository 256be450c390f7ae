"""Normalisation constants and radial densities of the s states.

Shows how the mass profile changes N' and how it pulls the plus and minus
densities together. Run with ``python3 demos/normalised_states.py``.
"""

import numpy as np

from kgyukawa import PhysicalConfig, QuantumNumbers, build_state
from kgyukawa.wavefunction import StateClass, classify_state, density_profile, node_count

base = PhysicalConfig(alpha=0.01, eta=0.1)

# With m1 > 0 the exponent at the origin grows like m1/alpha, so the bare
# function is tiny and N' in the dr measure becomes astronomically large.
print("n   N'(plus, m1=0)   N'(plus, m1=0.1)  N'(minus, m1=0.1)")
for n in range(8):
    cells = []
    for m1, branch in ((0.0, "plus"), (0.1, "plus"), (0.1, "minus")):
        sol = build_state(QuantumNumbers(n, 0), base.with_(m1=m1), branch, "closed_form")
        ok = classify_state(sol) is StateClass.NORMALIZABLE
        cells.append(f"{sol.norm:16.6g}" if ok else f"{'imaginary':>16}")
    print(f"{n}  " + "  ".join(cells))

# the densities share a grid that is logarithmic near the origin
r = np.geomspace(1e-3, 5e3, 4001)
pdm = base.with_(m1=0.1)
print("\nn  nodes  peak radius  max|rho+ - rho-| / peak")
for n in range(5):
    plus = build_state(QuantumNumbers(n, 0), pdm, "plus", "closed_form")
    minus = build_state(QuantumNumbers(n, 0), pdm, "minus", "closed_form")
    rho_p = density_profile(plus, r)[:, 1]
    rho_m = density_profile(minus, r)[:, 1]
    peak = r[np.argmax(rho_p)]
    print(f"{n}  {node_count(plus):5d}  {peak:11.2f}  {np.max(np.abs(rho_p - rho_m)) / rho_p.max():.4f}")
