"""Secondary zeta functions over the nontrivial zeros of the Riemann zeta function.

The main objects are Zcal(sigma, v) = sum_k (tau_k^2 + v)^-sigma over the zero
ordinates tau_k, the Hurwitz-type sums sum_k (tau_k + a)^(-2 sigma), and
xi(s, x) = (2 pi)^s sum_rho (x - rho)^-s.
"""
from __future__ import annotations

from .evaluate import Evaluator, Zcal, Zv, select_method
from .results import (
    ConvergenceError,
    DomainError,
    EvalResult,
    PoleError,
    PolarDatum,
    ZzkError,
)
from .zeros import ZerosTable, bundled_zeros, default_zeros, fetch_zeros, load_zeros, parse_zeros

__all__ = [
    "ConvergenceError",
    "DomainError",
    "EvalResult",
    "Evaluator",
    "PoleError",
    "PolarDatum",
    "ZerosTable",
    "Zcal",
    "Zv",
    "ZzkError",
    "bundled_zeros",
    "default_zeros",
    "fetch_zeros",
    "load_zeros",
    "parse_zeros",
    "select_method",
]
