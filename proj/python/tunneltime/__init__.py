"""Quantum tunneling times for one-dimensional barriers.

All quantities are in Hartree atomic units unless a name says otherwise
(``*_as``, ``*_fs``, ``*_ev``, ``*_angstrom``).
"""

from ._core import *  # noqa: F401,F403
from ._core import TunnelTimeError  # noqa: F401

__version__ = "0.1.0"
