"""Spectra of random block matrices ``I_k (x) A_n + W_k (x) B_n``.

Simulation, limiting laws built from free additive convolution, and
simulation-versus-theory comparison.
"""

__version__ = "0.1.0"
