"""fgre: an exact engine for finite-group representation theory.

Everything is computed in exact arithmetic over the cyclotomic field
Q(zeta24), which contains i, the cube root of unity, sqrt(2) and sqrt(3):
enough for the character tables, group-algebra idempotents, explicit
representation matrices and gamma operators of the groups this package
targets (Q8, the binary tetrahedral group 2T, and user-supplied groups
whose exponent divides 24).
"""

from fgre.backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
