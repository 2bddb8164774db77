"""Signed tilings by ribbon L n-ominoes decided with Groebner bases over Z and Q."""

__version__ = "0.1.0"
