"""Two-photon interferometric lithography simulator.

Python bindings over the C++ core: spectral ingredients of the biphoton
state, the correlation function u(z), the interferometer amplitudes and
fringes, a discrete-mode Fock oracle, and the classical-resolution
calculators.
"""

from ._qlitho import *  # noqa: F401,F403

__version__ = "0.1.0"
