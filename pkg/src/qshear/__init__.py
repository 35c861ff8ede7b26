"""Quantum shear coordinates on bordered cusped surfaces."""

__version__ = "0.1.0"
