"""
Grothendieck polynomials from every direction: divided-difference
operators, bounded factorization generating functions, tableau models,
Hecke insertion, and the explicit bijections tying them together, with
exact integer arithmetic throughout.
"""

__version__ = "0.1.0"
