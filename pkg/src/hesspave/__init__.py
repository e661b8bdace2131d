"""Affine-paving cell data for Hessenberg varieties of semisimple groups."""

__version__ = "0.1.0"
