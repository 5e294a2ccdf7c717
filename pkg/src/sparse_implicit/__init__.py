"""Sparse implicitization of rational surfaces and curves by linear syzygies."""

__version__ = "0.1.0"
