"""Kerov character polynomials of symmetric groups, computed by counting
factorizations of cycles that satisfy a marriage condition."""

from .diagram import MultiRectangular, free_cumulants, frobenius_character, s_functionals, transition_moments
from .kerov import KerovResult, generalized_kerov, kerov_polynomial, linear_coefficient, quadratic_coefficient
from .oracle import cycle_cumulant, mn_character, normalized_character
from .perm import Permutation, compose, long_cycle, multi_cycle
from .polynomial import CumulantPolynomial
from .series import TruncatedSeries
from .stanley import StanleyPolynomial, kerov_via_derivatives, stanley_character

__version__ = "0.1.0"

__all__ = [
    "CumulantPolynomial",
    "KerovResult",
    "MultiRectangular",
    "Permutation",
    "StanleyPolynomial",
    "TruncatedSeries",
    "compose",
    "cycle_cumulant",
    "free_cumulants",
    "frobenius_character",
    "generalized_kerov",
    "kerov_polynomial",
    "kerov_via_derivatives",
    "linear_coefficient",
    "long_cycle",
    "mn_character",
    "multi_cycle",
    "normalized_character",
    "quadratic_coefficient",
    "s_functionals",
    "stanley_character",
    "transition_moments",
]
