"""Exact computations with cyclic and cylindrical modules attached to
finite-dimensional Hopf module algebras."""

__version__ = "0.1.0"
