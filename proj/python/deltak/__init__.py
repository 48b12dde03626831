"""Delta-matroid invariants computed by exact torus localization.

Polynomials come back as lists of :class:`fractions.Fraction`, index i
holding the coefficient of v**i.
"""

from fractions import Fraction

from ._deltak import (
    DEFAULT_SEED,
    ContractViolation,
    DeltaMatroid,
    InvalidInputError,
    ResourceError,
    all_delta_matroids,
    canonical_form,
    from_graph,
    from_json,
    is_very_ample,
    member,
    validate,
)
from . import _deltak

__all__ = [
    "ContractViolation",
    "DeltaMatroid",
    "InvalidInputError",
    "ResourceError",
    "all_delta_matroids",
    "canonical_form",
    "euler_char",
    "from_graph",
    "from_json",
    "interlace",
    "interlace_via_integral",
    "is_very_ample",
    "member",
    "r_poly",
    "validate",
]


def _poly(coeffs):
    return [Fraction(c) for c in coeffs]


def interlace(d):
    return _poly(_deltak._interlace(d))


def r_poly(d, mode="y", jobs=1, directions=3, seed=DEFAULT_SEED):
    """R-polynomial in mode 'y' (polytope class) or 'orbit' (semigroup class)."""
    return _poly(_deltak._r_poly(d, mode, jobs, directions, seed))


def euler_char(d, doubled=False, jobs=1, directions=3, seed=DEFAULT_SEED):
    return Fraction(_deltak._euler_char(d, doubled, jobs, directions, seed))


def interlace_via_integral(d, jobs=1, directions=3, seed=DEFAULT_SEED):
    return _poly(_deltak._interlace_via_integral(d, jobs, directions, seed))
