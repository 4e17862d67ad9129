"""Quantum energy teleportation on a linear trapped-ion crystal.

Thin python layer over the C++ core: equilibrium geometry, phonon modes,
closed-form protocol energies and the truncated-Fock brute-force oracle.
"""

from ._qet_ion import *  # noqa: F401,F403
from ._qet_ion import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
