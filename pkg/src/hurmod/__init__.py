"""Exact arithmetic for class-number generating series at prime level.

The package computes Hurwitz class numbers and their level-N relatives by
exact rational arithmetic, certifies the integrality and congruence
identities that tie them together, constructs the quaternionic cusp series
that witnesses the key congruence at prime level, and runs the class-number
criterion (with a numeric L-value cross check at level 11) for imaginary
quadratic twists.

Subpackages and modules
-----------------------
arith       number-theoretic kernel (symbols, totients, discriminants)
classnum    class-number engines and the level-N orbit oracle
jacobi      discriminant-indexed coefficient series and theta expansions
grpmod      virtual-module tables, optimality certificates, lattice rank
quaternion  quaternion orders, ideal classes, theta series, cusp series
lfun        level-11 newform, twisted L-values, finiteness predictor
cli         command-line interface and verification suites
_kernels    hot loops (compiled extension when available, else pure Python)
"""

__version__ = "0.1.0"

from .errors import CapacityError

__all__ = ["CapacityError", "__version__"]
