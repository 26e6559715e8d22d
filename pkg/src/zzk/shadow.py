"""Zeta functions of the trivial zeros ("shadow" zeta functions).

The trivial zeros of zeta(1/2 - t) sit at t = 1/2 + 2k and those of
beta(1/2 - t) at t = -1/2 + 2k (k >= 1); their Dirichlet series are

    Z(s)      = sum (1/2 + 2k)^-s = 2^-s zeta(s, 5/4)
    Z_beta(s) = sum (-1/2 + 2k)^-s = 2^-s zeta(s, 3/4)

and both are written through zeta and beta for evaluation.
"""
from __future__ import annotations

import math
from fractions import Fraction

from . import specfun as sf
from .results import DomainError, PoleError, PolarDatum

_NEAR_POLE = 1e-3

SHADOW_POLE = PolarDatum(location=1.0, order=1, lead=0.0, residue=0.5)


def _near_pole_part(s: float) -> float:
    """(2^s - 1) zeta(s) / 2 from the regular Laurent data of zeta at 1."""
    u = s - 1.0
    P = sf.zeta_regular_jet(s, 0)[0]
    return math.expm1(s * math.log(2.0)) * P / (2.0 * u)


def shadow_Z(s: float) -> float:
    """Z(s) = 2^s [((1 - 2^-s) zeta(s) + beta(s))/2 - 1]; simple pole at s = 1."""
    s = float(s)
    if s == 1.0:
        raise PoleError("shadow zeta has a simple pole at s = 1", SHADOW_POLE)
    if s <= 0 and s == int(s):
        return float(shadow_Z_negative_int(int(-s)))
    p = 2.0**s
    if abs(s - 1.0) < _NEAR_POLE:
        return _near_pole_part(s) + 0.5 * p * sf.beta(s) - p
    return 0.5 * ((p - 1.0) * sf.zeta(s) + p * sf.beta(s)) - p


def shadow_Z_beta(s: float) -> float:
    """Z_beta(s) = 2^s ((1 - 2^-s) zeta(s) - beta(s)) / 2; simple pole at s = 1."""
    s = float(s)
    if s == 1.0:
        raise PoleError("beta shadow zeta has a simple pole at s = 1", SHADOW_POLE)
    p = 2.0**s
    if abs(s - 1.0) < _NEAR_POLE:
        return _near_pole_part(s) - 0.5 * p * sf.beta(s)
    return 0.5 * ((p - 1.0) * sf.zeta(s) - p * sf.beta(s))


def shadow_Z_residue() -> PolarDatum:
    """Pole data of Z (and of Z_beta) at s = 1."""
    return SHADOW_POLE


def shadow_Z_deriv0() -> float:
    """Z'(0) = -(7/4) log 2 - (1/2) log pi + log Gamma(1/4)."""
    return -1.75 * math.log(2.0) - 0.5 * sf.LOG_PI + math.lgamma(0.25)


def shadow_Z_negative_int(n: int) -> Fraction:
    """Z(-n) = -2^n B_{n+1}(1/4)/(n+1) - 2^-n, exact."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return -Fraction(2) ** n * sf.bernoulli_poly(n + 1, Fraction(1, 4)) / (n + 1) - Fraction(1, 2**n)


def shadow_Z_negative_int_alt(n: int) -> Fraction:
    """Second closed form: ((1 - 2^-n) B_{n+1}/(n+1) + 2^{-n-1} E_n)/2 - 2^-n."""
    if n < 0:
        raise DomainError("n must be non-negative")
    two = Fraction(2)
    return (
        ((1 - two**-n) * sf.bernoulli(n + 1) / (n + 1) + two ** (-n - 1) * sf.euler_number(n)) / 2
        - two**-n
    )


def shadow_Z_positive_int(n: int) -> float:
    """Z(n) = (-1)^n 2^-n (log Gamma)^(n)(5/4)/(n-1)! for n >= 2."""
    if n < 2:
        raise DomainError("n must be at least 2")
    return (-1) ** n * 2.0**-n * sf.polygamma(n - 1, 1.25) / math.factorial(n - 1)


def shadow_Z_hurwitz(s: float) -> float:
    """Z(s) through its Hurwitz form 2^-s zeta(s, 5/4)."""
    return 2.0 ** (-s) * float(sf.hurwitz_zeta(float(s), 1.25))
