"""Isomorph-free listing of unlabeled trees by backbone decoration."""

__version__ = "0.1.0"
