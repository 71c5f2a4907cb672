"""High-precision invariants, classification and numerical verification
of degree-2, conductor-1 functional equations."""

from .precision import get_precision, set_precision, working_precision
from .exact import ExactScalar, QI
from .factors import (GammaFactor, StructuralQ, InvariantSet, Classification,
                      invariants, normalize_shift, duplicate, virtual_gamma,
                      classify, classify_pair, zeta_squared_gamma, delta_gamma,
                      from_descriptor, to_descriptor, load_descriptor)

__version__ = "0.1.0"
