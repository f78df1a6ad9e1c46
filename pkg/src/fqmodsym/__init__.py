"""Modular symbols for Gamma_0(n) over F_q[T].

Builds the finite presentation of the symbol space from the projective
line over A/n, realizes Hecke operators on the cuspidal part in exact
arithmetic, and evaluates vanishing and independence of distinguished
Hecke-algebra elements.
"""

__version__ = "0.1.0"
