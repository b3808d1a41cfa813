#!/usr/bin/env python3
"""
TotDom Game Solver - Source Package
Combinatorial Games Group

Exact solver, strategies and claim verifier for the total domination game
and its pass and predomination variants.
"""

__version__ = "1.0.0"
__author__ = "Combinatorial Games Group"
__description__ = "Exact solver for the total domination game and its variants"

# Package metadata
__all__ = ["__version__", "__author__", "__description__"]
