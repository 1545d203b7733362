"""Numerical toolkit for finite complete Pick spaces and their model spaces."""

__version__ = "0.1.0"
