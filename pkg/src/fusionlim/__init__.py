"""Fusion systems of permutation groups, offenders, and higher limits of center functors."""

__version__ = "0.1.0"
