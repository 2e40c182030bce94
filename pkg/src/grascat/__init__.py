"""Exact arithmetic for noncrossing complexes, generalized root systems,
planar-kinematics polytopes, u-variable binary identities and noncrossing
amplitudes."""

__version__ = "0.1.0"
