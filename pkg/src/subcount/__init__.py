"""Certified checks of subgroup-count bounds for finite groups."""

__version__ = "0.1.0"
