"""Independent reference computations for the tests (mpmath only, no package code)."""
from __future__ import annotations

from functools import lru_cache

import mpmath as mp


def xi(s):
    if s == 0 or s == 1:
        return mp.mpf(1)
    if mp.im(s) == 0 and mp.re(s) < 0 and mp.re(s) % 2 == 0:
        # Gamma(s/2) has a pole cancelled by the trivial zero: the limit is 2 (-1)^n zeta'(-2n) / n!
        n = int(-mp.re(s) / 2)
        return s * (s - 1) * mp.pi ** (-s / 2) * 2 * (-1) ** n * mp.zeta(s, derivative=1) / mp.factorial(n)
    return s * (s - 1) * mp.pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def log_delta_quarter(lam):
    """log prod_k (1 + lam/(tau_k^2 + 1/4)) = log Xi(1/2 + sqrt(lam + 1/4)) (Xi(1) = 1)."""
    return mp.log(xi(mp.mpf(1) / 2 + mp.sqrt(lam + mp.mpf(1) / 4)))


def _stirling_terms():
    # large-lambda terms (mu, coefficient of lam^mu log lam, coefficient of lam^mu)
    L2P = mp.log(2 * mp.pi)
    return [
        (mp.mpf(1) / 2, mp.mpf(1) / 4, -(1 + L2P) / 2),
        (mp.mpf(0), mp.mpf(7) / 8, mp.log(8 * mp.pi) / 4),
        (-mp.mpf(1) / 2, mp.mpf(1) / 32, -L2P / 16 - mp.mpf(1) / 48),
    ]


def _power_log_tail(p, at, a, C):
    """Integral over (C, oo) of lam^p (at log lam + a), p < -1."""
    q = p + 1
    return -C**q * ((a + at * mp.log(C)) / q - at / q**2)


def Z_quarter_mellin(sigma, dps: int = 40, cut_exp: int = 10):
    """Zcal(sigma, 1/4) for -1 < sigma < 1, sigma not in {+-1/2, 0}, from the Mellin
    transform of log Delta with the large-lambda terms above sigma subtracted.

    Z(sigma) = (sigma sin(pi sigma)/pi) int_0^oo lam^(-sigma-1) [log Delta - A_sigma] dlam,
    where A_sigma collects the terms with mu > sigma; those are integrated
    analytically on (0, 1), and beyond lam = 10^cut_exp the remaining known
    terms plus a fitted remainder c1/lam + (c2 log lam + c3) lam^(-3/2)
    are integrated analytically.
    """
    with mp.workdps(dps):
        sigma = mp.mpf(sigma)
        terms = _stirling_terms()
        used = [t for t in terms if t[0] > sigma]
        rest = [t for t in terms if t[0] <= sigma]

        def A(lam, ts):
            return sum((at * mp.log(lam) + a) * lam**mu for mu, at, a in ts)

        head = mp.quad(lambda l: l ** (-sigma - 1) * log_delta_quarter(l), [0, 1])
        head -= sum(a / (mu - sigma) - at / (mu - sigma) ** 2 for mu, at, a in used)
        pts = [mp.mpf(10) ** k for k in range(0, cut_exp + 1)]
        mid = mp.quad(lambda l: l ** (-sigma - 1) * (log_delta_quarter(l) - A(l, used)), pts)
        C = pts[-1]
        # remainder ~ c1/lam + (c2 log lam + c3) lam^(-3/2), fitted at three points
        xs = [C, C / 10, C / 100]
        M = mp.matrix([[1 / x, mp.log(x) * x ** (-1.5), x ** (-1.5)] for x in xs])
        r = mp.matrix([log_delta_quarter(x) - A(x, terms) for x in xs])
        c1, c2, c3 = mp.lu_solve(M, r)
        tail = sum(_power_log_tail(mu - sigma - 1, at, a, C) for mu, at, a in rest)
        tail += _power_log_tail(-sigma - 2, 0, c1, C)
        tail += _power_log_tail(-sigma - 2.5, c2, c3, C)
        return float(sigma * mp.sin(mp.pi * sigma) / mp.pi * (head + mid + tail))


@lru_cache(maxsize=None)
def _log_xi_coeffs(kind: str, v: float, n: int, dps: int = 25) -> tuple:
    """Cauchy-integral Taylor coefficients of a shifted log Xi.

    kind 'lam': lam -> log Xi(1/2 + sqrt(lam + v)); log Xi(1/2 + t) is even
    in t, so the branch of the square root is irrelevant on the circle.
    kind 't': t -> log Xi(1/2 + t); kind 's': s -> log Xi(s).
    """
    with mp.workdps(dps):
        half = mp.mpf(1) / 2
        if kind == "lam":
            vv = mp.mpf(v)
            f, r = (lambda lam: mp.log(xi(half + mp.sqrt(lam + vv)))), 20
        elif kind == "t":
            f, r = (lambda t: mp.log(xi(half + t))), 5
        else:
            f, r = (lambda s: mp.log(xi(s))), 5
        return tuple(float(c) for c in mp.taylor(f, 0, n, method="quad", radius=r))


def zeta_zeta_value(n: int, v: float = 0.0) -> float:
    """sum_k (tau_k^2 + v)^-n = (-1)^(n-1) n [lam^n] log Delta(lam), for n >= 1."""
    if v == 0:
        c = _log_xi_coeffs("t", 0.0, 2 * max(n, 4))
        return (-1) ** (n - 1) * n * c[2 * n]
    c = _log_xi_coeffs("lam", float(v), max(n, 4))
    return (-1) ** (n - 1) * n * c[n]


def power_sum_over_zeros(n: int) -> float:
    """sum_rho rho^-n = -(log Xi)^(n)(0)/(n-1)!, with Xi(0) = 1."""
    c = _log_xi_coeffs("s", 0.0, max(n, 6))
    return -n * c[n]
