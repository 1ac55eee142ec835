"""Sylow p-subgroups of the finite classical groups and generators of their invariant fields."""

__version__ = "0.1.0"
