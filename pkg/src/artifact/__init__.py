"""Equivariant quantum cohomology of Grassmannians from vicious and osculating walkers."""

__version__ = "0.1.0"
