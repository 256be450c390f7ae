"""Klein-Gordon bound states in a Hulthen-form Yukawa potential with a
position-dependent mass.

The submodules are

``model``        parameters, potentials and the mass profile
``specfun``      log-gamma, Pochhammer symbols and Gauss hypergeometric sums
``spectrum``     closed-form and exact eigenvalues, critical points
``wavefunction`` eigenfunctions, normalisation and densities
``oracle``       shooting-method ODE solver used for verification
``cli``          command-line front end
"""

from .model import PhysicalConfig, QuantumNumbers
from .spectrum import Branch, EnergyLevel, EnergyPair, energy_closed_form, energy_exact
from .wavefunction import WaveSolution, build_state

__version__ = "0.1.0"

__all__ = [
    "PhysicalConfig",
    "QuantumNumbers",
    "Branch",
    "EnergyLevel",
    "EnergyPair",
    "energy_closed_form",
    "energy_exact",
    "WaveSolution",
    "build_state",
]
