"""Shisen-Sho and Mahjong solitaire: exact pair tests, solvers, samplers."""

__version__ = "0.1.0"
