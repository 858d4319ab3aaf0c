"""Tentacular planning engine over a deontic cognitive event calculus."""

__version__ = "0.1.0"
