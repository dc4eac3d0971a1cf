"""Equivariant Lefschetz numbers of linear G_m-actions on projective space,
computed three ways: cohomology characters, fixed-point localization and the
resummed bifiltration series of the fixed part of the adelic complex."""

from .errors import (InvalidInputError, LefschetzError, NotApplicableError, NotInvertibleError,
                     UndefinedValuationError)
from .exactnum import LAMBDA, LaurentPoly, RationalFunction, converges_to, expand

__version__ = "0.1.0"
