"""Hochschild calculus of gentle algebras computed from quiver presentations."""

__version__ = "0.1.0"
