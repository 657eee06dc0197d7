"""Exact-rational equation systems for Grassmannians, Schubert varieties,
Bott-Samelson resolutions and sphere bundles."""

__version__ = "0.1.0"
