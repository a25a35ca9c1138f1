"""Exact multiplicative Zagreb indices, extremal graph families and exhaustive checks of their extremal theorems."""

__version__ = "0.1.0"
