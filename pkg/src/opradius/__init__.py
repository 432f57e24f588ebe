"""Generalized numerical radii and Schatten norm geometry for complex matrices."""

__version__ = "0.1.0"
