"""Direct summation over the zeros and the expansions built on it.

Sums run over the ordinates of a ZerosTable. The smooth zero density
dN(T) = (1/2pi) log(T/2pi) dT supplies tail integrals; for sigma < 1/2 the
closed form of that integral is its analytic continuation, which is what the
Euler-Maclaurin and Cesaro variants use there.
"""
from __future__ import annotations

import cmath
import math
from typing import Callable, Union

import numpy as np
from scipy import integrate, special

from .results import ConvergenceError, DomainError, EvalResult, PoleError
from .zeros import ZerosTable

Number = Union[float, complex]
Evaluator = Callable[[Number], Union[EvalResult, Number]]

TWO_PI = 2.0 * math.pi
_TAIL_TERMS_MAX = 200


def _fsum(x: np.ndarray) -> Number:
    if np.iscomplexobj(x):
        return complex(math.fsum(x.real), math.fsum(x.imag))
    return math.fsum(x)


def _real_if_real(sigma: Number, value: Number) -> Number:
    if isinstance(sigma, complex) and sigma.imag != 0:
        return complex(value)
    return float(value.real) if isinstance(value, complex) else float(value)


def density_tail(sigma: Number, v: float, T0) -> Number:
    """Integral of (T^2+v)^-sigma dN(T) over (T0, oo), N the smooth zero count.

    Closed form term by term in the binomial series of (1 + v/T^2)^-sigma
    (|v| < T0^2/2); for Re sigma <= 1/2 this is the analytic continuation.
    ``T0`` may be an array.
    """
    T0 = np.asarray(T0, dtype=float)
    if np.any(np.abs(v) > 0.5 * T0**2):
        if T0.ndim:
            return np.array([density_tail(sigma, v, t) for t in T0])
        return _density_tail_quad(sigma, v, float(T0))
    cplx = isinstance(sigma, complex)
    L = np.log(T0 / TWO_PI)
    total = np.zeros_like(T0, dtype=complex if cplx else float)
    coef: Number = 1.0
    for j in range(_TAIL_TERMS_MAX):
        p = 2 * sigma + 2 * j
        if p == 1:
            raise PoleError("density tail integral has a pole at sigma = 1/2")
        q = p - 1
        term = coef * v**j * np.exp(-q * np.log(T0)) / q * (L + 1.0 / q) / TWO_PI
        total = total + term
        if v == 0 or np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break
        coef = coef * (-sigma - j) / (j + 1)
    else:
        raise ConvergenceError("density tail expansion did not converge")
    return total if total.ndim else total[()]


def _density_tail_quad(sigma: Number, v: float, T0: float) -> Number:
    if (sigma.real if isinstance(sigma, complex) else sigma) <= 0.5:
        raise DomainError("numeric tail integral needs Re sigma > 1/2 when v is large")

    def f(T):
        return (T * T + v) ** (-sigma) * math.log(T / TWO_PI) / TWO_PI

    val, _ = integrate.quad(f, T0, math.inf, limit=200, complex_func=isinstance(sigma, complex))
    return val


def _terms(sigma: Number, v: float, table: ZerosTable, K: int) -> np.ndarray:
    if K > table.count:
        raise DomainError(f"K={K} exceeds table size {table.count}")
    base = table.squares[:K] + v
    if np.any(base <= 0):
        raise DomainError("v must exceed -tau_1^2")
    if isinstance(sigma, complex):
        return np.exp(-sigma * np.log(base))
    return base ** (-sigma)


def raw_partial_sum(sigma: Number, v: float, table: ZerosTable, K: int | None = None) -> EvalResult:
    """sum_{k<=K} (tau_k^2 + v)^-sigma; err is the smooth-density tail beyond tau_K."""
    re = sigma.real if isinstance(sigma, complex) else sigma
    if re <= 0.5:
        raise DomainError("raw sums need Re sigma > 1/2; use euler_maclaurin_sum or continuation")
    K = table.count if K is None else K
    if K < 0 or K > table.count:
        raise DomainError(f"K={K} outside 0..{table.count}")
    T0 = table.ordinates[K - 1] if K > 0 else TWO_PI
    value = _fsum(_terms(sigma, v, table, K)) if K else 0.0
    err = abs(density_tail(sigma, v, T0))
    return EvalResult(_real_if_real(sigma, value), float(err), "raw-sum", K)


def _em_partials(sigma: float, v: float, table: ZerosTable, Ks: np.ndarray) -> np.ndarray:
    """S_K = sum_{k<K} f_k + f_K/2 + tail(tau_K) for every K in Ks (1-based)."""
    Kmax = int(Ks.max())
    f = _terms(sigma, v, table, Kmax)
    cums = np.concatenate(([0.0], np.cumsum(f)))
    tails = density_tail(sigma, v, table.ordinates[Ks - 1])
    return cums[Ks - 1] + 0.5 * f[Ks - 1] + tails


def euler_maclaurin_sum(sigma: float, v: float, table: ZerosTable, K: int | None = None) -> EvalResult:
    """Partial sum over k < K, half the K-th term, and the smooth tail from tau_K.

    err is the spread of these approximants over the last tenth of K.
    """
    if sigma <= 0:
        raise DomainError("euler_maclaurin_sum needs sigma > 0; use cesaro_sum or continuation")
    if sigma == 0.5:
        raise PoleError("sigma = 1/2 is a pole; use finite_part_at_half")
    K = table.count if K is None else K
    if not 2 <= K <= table.count:
        raise DomainError(f"K={K} outside 2..{table.count}")
    f = _terms(sigma, v, table, K)
    value = math.fsum(f[: K - 1]) + 0.5 * f[K - 1] + float(density_tail(sigma, v, table.ordinates[K - 1]))
    Ks = np.arange(max(1, K - K // 10), K + 1)
    S = _em_partials(sigma, v, table, Ks)
    err = float(np.max(np.abs(S - value)))
    return EvalResult(float(value), err, "euler-maclaurin", K)


CESARO_WINDOW = (-0.25, 0.5)


def cesaro_sum(sigma: float, v: float, table: ZerosTable, K: int | None = None) -> EvalResult:
    """Mean of the Euler-Maclaurin approximants S_1..S_K.

    err is the standard deviation of the running mean over its last decade.
    The left end sigma = -1/4 is admitted so the failure there shows up as a
    large err rather than an exception.
    """
    lo, hi = CESARO_WINDOW
    if not lo <= sigma < hi:
        raise DomainError(f"cesaro_sum needs sigma in [{lo}, {hi})")
    K = table.count if K is None else K
    if not 10 <= K <= table.count:
        raise DomainError(f"K={K} outside 10..{table.count}")
    S = _em_partials(sigma, v, table, np.arange(1, K + 1))
    running = np.cumsum(S) / np.arange(1, K + 1)
    value = math.fsum(S) / K
    err = float(np.std(running[K // 10 :]))
    return EvalResult(value, err, "cesaro", K)


# ---------------------------------------------------------------------------
# Expansions in a shift parameter


def _unwrap(r: Union[EvalResult, Number]) -> tuple[Number, float]:
    if isinstance(r, EvalResult):
        return r.value, r.err
    return r, 0.0


def _expand(sigma: Number, shift_exp: float, x: Number, ratio: float, zcal: Evaluator, L: int,
            alpha: Number) -> EvalResult:
    """sum_l C(-alpha, l) x^l Zcal(sigma + l*shift_exp) with a geometric tail bound."""
    total: list[Number] = []
    err = 0.0
    coef: Number = 1.0
    work = 0
    last = 0.0
    for l in range(L + 1):
        if coef == 0:
            break
        val, e = _unwrap(zcal(sigma + l * shift_exp))
        term = coef * x**l * val
        total.append(term)
        err += abs(coef * x**l) * e
        last = abs(term)
        work += 1
        coef = coef * (-alpha - l) / (l + 1)
    if coef != 0 and ratio > 0:
        # next coefficient relative growth is bounded by |alpha + L|/(L+1)
        r = ratio * max(1.0, abs(alpha + L + 1) / (L + 2))
        if r >= 1:
            raise ConvergenceError("expansion tail does not contract")
        err += last * r / (1.0 - r)
    value = _fsum(np.array(total))
    return EvalResult(value, float(err), "expansion", work)


def hurwitz_v(sigma: Number, v: float, zcal: Evaluator, L: int = 8, tau1_sq: float = 199.790455) -> EvalResult:
    """Zcal(sigma, v) = sum_l C(-sigma, l) Zcal(sigma + l) v^l, valid for |v| < tau_1^2."""
    if abs(v) >= tau1_sq:
        raise DomainError("hurwitz_v needs |v| < tau_1^2")
    if v == 0:
        val, e = _unwrap(zcal(sigma))
        return EvalResult(val, e, "expansion", 1)
    res = _expand(sigma, 1.0, v, abs(v) / tau1_sq, zcal, L, sigma)
    return EvalResult(_real_if_real(sigma, res.value), res.err, res.method, res.work)


def hurwitz_a(sigma: Number, a: Number, zcal: Evaluator, L: int = 24, tau1: float = 14.134725142) -> EvalResult:
    """Sum (tau_k + a)^(-2 sigma) = sum_l C(-2 sigma, l) Zcal(sigma + l/2) a^l, |a| < tau_1."""
    if abs(a) >= tau1:
        raise DomainError("hurwitz_a needs |a| < tau_1")
    if a == 0:
        val, e = _unwrap(zcal(sigma))
        return EvalResult(val, e, "expansion", 1)
    res = _expand(sigma, 0.5, a, abs(a) / tau1, zcal, L, 2 * sigma)
    real = not isinstance(a, complex) or a.imag == 0
    value = _real_if_real(sigma, res.value) if real else complex(res.value)
    return EvalResult(value, res.err, res.method, res.work)


def xi_hurwitz(s: Number, x: Number, zcal: Evaluator, L: int = 24) -> EvalResult:
    """xi(s, x) = (2pi)^s sum_rho (x - rho)^-s through the shifted sums at a = +-iy.

    With x = 1/2 + y, x - rho = -i(tau + iy), so
    xi = (2pi)^s [e^{i pi s/2} Zfrak(s/2, iy) + e^{-i pi s/2} Zfrak(s/2, -iy)].
    Non-positive integers s are finite trace values and go to the closed form.
    """
    if s == 1:
        raise PoleError("xi(s, x) has a pole at s = 1")
    if not isinstance(s, complex) or s.imag == 0:
        sr = float(s.real if isinstance(s, complex) else s)
        if sr <= 0 and sr == int(sr):
            from .closedforms import xi_trace

            xr = complex(x)
            if xr.imag != 0:
                raise DomainError("trace values are implemented for real x")
            return EvalResult(xi_trace(1 - int(sr), xr.real - 0.5), 0.0, "closed-form", 0)
    y = complex(x) - 0.5
    plus = hurwitz_a(s / 2, 1j * y, zcal, L)
    minus = hurwitz_a(s / 2, -1j * y, zcal, L)
    ph = cmath.exp(0.5j * math.pi * s)
    pre = TWO_PI**s
    value = pre * (ph * complex(plus.value) + complex(minus.value) / ph)
    err = abs(pre) * (abs(ph) * plus.err + minus.err / abs(ph))
    if (not isinstance(s, complex) or s.imag == 0) and complex(x).imag == 0:
        value = value.real
    return EvalResult(value, float(err), "expansion", plus.work + minus.work)
