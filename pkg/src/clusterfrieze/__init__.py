"""Cluster algebras of geometric type, acyclic belts and frieze patterns."""

__version__ = "0.1.0"
