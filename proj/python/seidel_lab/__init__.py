"""Seidel matrices, energies, odd pairs, and tree bounds."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
