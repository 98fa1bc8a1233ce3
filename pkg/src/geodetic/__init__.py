"""Geodetic graphs homeomorphic to a given geodetic graph, via Diophantine systems."""

__version__ = "0.1.0"
