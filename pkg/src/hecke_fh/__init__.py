"""Exact computations in Iwahori-Hecke algebras of type A, their centers, and
the Farahat-Higman structure constants of Geck-Rouquier classes."""

__version__ = "0.1.0"
