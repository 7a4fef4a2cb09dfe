"""Minimum-degree stability thresholds for clique-free and odd-girth graphs of bounded maximum degree."""

__version__ = "0.1.0"
