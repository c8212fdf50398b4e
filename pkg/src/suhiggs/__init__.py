"""Exact pointwise and numerical checks for SU(p+1,p) Higgs bundles and their spectral data."""

__version__ = "0.1.0"
