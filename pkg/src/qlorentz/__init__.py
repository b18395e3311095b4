"""qlorentz: quantum Lorentz transformations of spin and polarization qubits.

Subpackages by physics layer:

  lorentz    boosts, standard transforms, little groups, Wigner rotations
  grids      invariant-measure momentum quadrature
  massive    spin-1/2 wavepackets, boosted spin marginals, channel/metrics
  photon     polarization beams, effective 3x3 density matrix, Doppler
  entangle   two-particle states, concurrence, CHSH under boosts
  causality  bipartite Kraus operations, no-signalling classification
  sweeps     parameter sweeps powering the CLI
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND  # noqa: F401
