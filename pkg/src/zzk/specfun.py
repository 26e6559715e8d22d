"""Classical special functions and constants used throughout the package.

Everything is binary64. Series are accumulated with ``math.fsum`` and
derivatives are carried as truncated Taylor series ("jets"): a jet of length
n+1 at s holds f^(j)(s)/j! for j = 0..n, so derivatives of products and
logarithms follow from power-series arithmetic instead of Bell polynomials.
"""
from __future__ import annotations

import cmath
import decimal
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np
from scipy import special

from .results import DomainError, PoleError

Real = Union[int, float, Fraction]
Scalar = Union[float, complex]

EULER_GAMMA = 0.57721566490153286061
LOG_PI = math.log(math.pi)
LOG_2PI = math.log(2.0 * math.pi)

MAX_DERIVATIVE_ORDER = 12
STIELTJES_MAX = 12
_STIELTJES_INTERNAL = 40  # extra terms feed the Laurent series near s = 1
_LAURENT_RADIUS = 0.25
_XI_LAURENT_RADIUS = 2.5
_EPS = 2.0**-56


# ---------------------------------------------------------------------------
# Exact rational sequences


_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n with the convention B_1 = -1/2."""
    if n < 0:
        raise DomainError("bernoulli index must be non-negative")
    cache = _bernoulli_cache
    while len(cache) <= n:
        m = len(cache)
        if m > 1 and m % 2 == 1:
            cache.append(Fraction(0))
            continue
        # sum_{k<=m} C(m+1, k) B_k = 0
        acc = Fraction(0)
        c = 1
        for k in range(m):
            acc += c * cache[k]
            c = c * (m + 1 - k) // (k + 1)
        cache.append(-acc / (m + 1))
    return cache[n]


_euler_cache: list[int] = [1]


def euler_number(n: int) -> int:
    """Exact Euler number E_n (E_0 = 1, E_2 = -1, E_4 = 5; odd ones vanish)."""
    if n < 0:
        raise DomainError("euler index must be non-negative")
    cache = _euler_cache
    while len(cache) <= n:
        m = len(cache)
        if m % 2 == 1:
            cache.append(0)
            continue
        cache.append(-sum(math.comb(m, k) * cache[k] for k in range(0, m, 2)))
    return cache[n]


def bernoulli_poly(n: int, x):
    """Bernoulli polynomial B_n(x) from the binomial-Bernoulli expansion.

    Exact (a Fraction) for int or Fraction arguments, float otherwise.
    """
    if n < 0:
        raise DomainError("bernoulli_poly degree must be non-negative")
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return sum(math.comb(n, k) * bernoulli(k) * x ** (n - k) for k in range(n + 1))
    x = float(x)
    return math.fsum(math.comb(n, k) * float(bernoulli(k)) * x ** (n - k) for k in range(n + 1))


# ---------------------------------------------------------------------------
# Stieltjes constants and their cumulants


def _stieltjes_em(n: int, N: int = 20, J: int = 20) -> float:
    """gamma_n from its limit definition with an Euler-Maclaurin tail.

    With f(x) = (log x)^n / x, the j-th derivative is x^(-1-j) P_j(log x) where
    P_0 = L^n and P_{j+1} = P_j' - (j+1) P_j; the P_j have integer coefficients.
    The sum cancels against (log N)^(n+1)/(n+1), so it runs in 50-digit decimal
    arithmetic and is rounded once at the end.
    """
    with decimal.localcontext() as ctx:
        ctx.prec = 50
        D = decimal.Decimal
        head = sum((D(k).ln() ** n / k for k in range(2, N)), D(1 if n == 0 else 0))
        LN = D(N).ln()
        val = head - LN ** (n + 1) / (n + 1) + LN**n / (2 * N)
        P = [0] * n + [1]  # ascending coefficients in L
        for j in range(1, 2 * J):
            dP = [k * P[k] for k in range(1, len(P))] + [0]
            P = [dP[k] - j * P[k] for k in range(len(P))]
            if j % 2 == 1:
                b = bernoulli(j + 1) / math.factorial(j + 1)
                poly = sum((c * LN**k for k, c in enumerate(P) if c), D(0))
                val -= D(b.numerator) / D(b.denominator) * poly / D(N) ** (j + 1)
        return float(val)


@dataclass(frozen=True)
class ConstantsCache:
    """Stieltjes constants and cumulants, built once and read-only thereafter."""

    stieltjes: tuple[float, ...]
    cumulants: tuple[float, ...]
    max_index: int
    notes: str = field(default="limit definition in 50-digit decimal, Euler-Maclaurin tail at N=20 with B_2..B_40")

    @classmethod
    def build(cls, max_index: int) -> "ConstantsCache":
        gam = tuple(_stieltjes_em(n) for n in range(max_index + 1))
        return cls(stieltjes=gam, cumulants=_cumulants_from(gam), max_index=max_index)


def _cumulants_from(gam) -> tuple[float, ...]:
    # -s zeta(1-s) = 1 + sum a_n s^n with a_n = -gamma_{n-1}/(n-1)!;
    # its logarithm sum b_n s^n has b_n = -gamma^c_{n-1}/(n-1)!.
    m = len(gam)
    a = [0.0] + [-gam[n - 1] / math.factorial(n - 1) for n in range(1, m + 1)]
    b = [0.0] * (m + 1)
    for n in range(1, m + 1):
        b[n] = a[n] - math.fsum(k * b[k] * a[n - k] for k in range(1, n)) / n
    return tuple(-b[n] * math.factorial(n - 1) for n in range(1, m + 1))


@lru_cache(maxsize=None)
def constants(max_index: int = _STIELTJES_INTERNAL) -> ConstantsCache:
    return ConstantsCache.build(max_index)


def stieltjes(n: int) -> float:
    """Stieltjes constant gamma_n (gamma_0 is Euler's constant)."""
    if not 0 <= n <= STIELTJES_MAX:
        raise DomainError(f"stieltjes index must lie in [0, {STIELTJES_MAX}]")
    return constants().stieltjes[n]


def stieltjes_cumulant(n: int) -> float:
    """Cumulant gamma^c_n: coefficients of log[-s zeta(1-s)] = -sum gamma^c_{n-1} s^n/(n-1)!."""
    if not 0 <= n <= STIELTJES_MAX:
        raise DomainError(f"cumulant index must lie in [0, {STIELTJES_MAX}]")
    return constants().cumulants[n]


# ---------------------------------------------------------------------------
# Jet arithmetic (truncated Taylor series in the shift h)


def jet_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = min(len(a), len(b))
    return np.convolve(a[:n], b[:n])[:n]


def jet_log(c: np.ndarray) -> np.ndarray:
    """Jet of log f from the jet of f (recursive cumulant scheme)."""
    n = len(c)
    g = np.zeros(n, dtype=np.result_type(c, float))
    c0 = c[0]
    g[0] = cmath.log(c0) if isinstance(c0, complex) or np.iscomplexobj(c) else math.log(abs(c0))
    for m in range(1, n):
        acc = m * c[m] - sum(k * g[k] * c[m - k] for k in range(1, m))
        g[m] = acc / (m * c0)
    return g


def jet_exp(g: np.ndarray) -> np.ndarray:
    n = len(g)
    e = np.zeros(n, dtype=np.result_type(g, float))
    e[0] = np.exp(g[0])
    for m in range(1, n):
        e[m] = sum(k * g[k] * e[m - k] for k in range(1, m + 1)) / m
    return e


def jet_reflect(c: np.ndarray) -> np.ndarray:
    """Jet of h -> f(-h): flips odd coefficients."""
    out = np.array(c, copy=True)
    out[1::2] *= -1
    return out


def jet_to_derivs(c: np.ndarray) -> np.ndarray:
    return np.array([c[j] * math.factorial(j) for j in range(len(c))])


def _sinpi(x: float) -> float:
    """sin(pi x) with exact zeros at integers."""
    r = math.fmod(x, 2.0)
    if r == int(r):
        return 0.0
    if 2 * r == int(2 * r):
        return 1.0 if r in (0.5, -1.5) else -1.0
    return math.sin(math.pi * r)


def _cospi(x: float) -> float:
    return _sinpi(x + 0.5)


def _trig_jet(phase: float, scale: float, n: int, cos: bool = False) -> np.ndarray:
    """Jet of sin(pi*(phase + scale*h)) (or cos)."""
    shift = 0.5 if cos else 0.0
    return np.array(
        [(math.pi * scale) ** j * _sinpi(phase + shift + 0.5 * j) / math.factorial(j) for j in range(n + 1)]
    )


def _is_real(s) -> bool:
    return not isinstance(s, complex) or s.imag == 0.0


# ---------------------------------------------------------------------------
# Hurwitz zeta by Euler-Maclaurin


_EM_LADDER = (1, 2, 3, 4, 6, 8, 10, 12, 16, 20, 25, 32, 40, 50, 64, 80, 100, 128, 160, 200, 256)
_EM_KMAX = 30


@lru_cache(maxsize=None)
def _em_coeff(k: int) -> float:
    return float(bernoulli(2 * k) / math.factorial(2 * k))


def _hurwitz_em_jet(s: Scalar, a: float, n: int) -> np.ndarray:
    """Jet of zeta(., a) at s by Euler-Maclaurin; valid for Re s > 1 - 2*K."""
    dtype = complex if not _is_real(s) else float
    if dtype is float:
        s = float(s.real if isinstance(s, complex) else s)
    u = s - 1.0
    if u == 0:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    fact = np.array([math.factorial(j) for j in range(n + 1)], dtype=float)
    for N in _EM_LADDER:
        x = N + a
        L = math.log(x)
        xs = cmath.exp(-s * L) if dtype is complex else math.exp(-s * L)
        # Q(h) = x/(u+h) + 1/2 + sum_k b_k x^(1-2k) (s+h)_(2k-1)
        inv = np.array([(-1) ** i / u ** (i + 1) for i in range(n + 1)], dtype=dtype)
        Q = [x * inv]
        Q[0] = Q[0].copy()
        Q[0][0] += 0.5
        poch = np.zeros(n + 1, dtype=dtype)
        poch[0] = s
        if n >= 1:
            poch[1] = 1.0
        scale = max(np.max(np.abs(Q[0])), 1e-300)
        prev = math.inf
        converged = False
        for k in range(1, _EM_KMAX + 1):
            if k > 1:
                for c in (s + 2 * k - 3, s + 2 * k - 2):
                    lin = np.zeros(n + 1, dtype=dtype)
                    lin[0] = c
                    if n >= 1:
                        lin[1] = 1.0
                    poch = jet_mul(poch, lin)
            term = _em_coeff(k) * x ** (1 - 2 * k) * poch
            mag = float(np.max(np.abs(term) * fact)) * (1.0 + L) ** n
            Q.append(term)
            if mag <= _EPS * scale * (1.0 + L) ** n:
                converged = True
                break
            if mag > prev and k > 3:
                break
            prev = mag
        if not converged:
            continue
        Qs = np.sum(np.array(Q), axis=0)
        E = np.array([(-L) ** j / math.factorial(j) for j in range(n + 1)])
        tail = xs * jet_mul(E, Qs)
        ks = np.arange(N, dtype=float) + a
        logs = np.log(ks)
        powers = np.exp(-s * logs) if dtype is complex else np.exp(-s * logs)
        out = np.zeros(n + 1, dtype=dtype)
        for j in range(n + 1):
            col = powers * (-logs) ** j / math.factorial(j)
            if dtype is complex:
                head = complex(math.fsum(col.real), math.fsum(col.imag))
            else:
                head = math.fsum(col)
            out[j] = head + tail[j]
        return out
    raise DomainError(f"Euler-Maclaurin did not converge for s={s!r}, a={a!r}")


_NEAR_INT_DELTA = 5e-2
_NEAR_INT_ORDER = 12


def _merged_singular_pair(n: int, delta: float, log_mu: complex) -> complex:
    """Gamma(1-u)(-mu)^(u-1) + zeta(u-n+1) mu^(n-1)/(n-1)! for u = n + delta, |delta| small.

    Both terms blow up like 1/delta; their sum is
    -mu^(n-1) P(delta) expm1(D(delta)) / (delta (n-1)!) with P(d) = d zeta(1+d)
    and D = log(pi d/sin(pi d)) + d log(-mu) - [lgamma(n+d) - lgamma(n)] - log P(d),
    a power series without constant term, summed directly.
    """
    N = _NEAR_INT_ORDER
    d = np.zeros(N + 1, dtype=complex)
    for k in range(1, N // 2 + 1):
        d[2 * k] += float(zeta(2.0 * k)) / k
    d[1] += log_mu - float(special.digamma(n))
    for j in range(2, N + 1):
        d[j] -= polygamma(j - 1, float(n)) / math.factorial(j)
    d -= jet_log(zeta_regular_jet(1.0, N))
    d[0] = 0.0
    D = complex(np.polyval(d[::-1], delta))
    D_over_delta = complex(np.polyval(d[:0:-1], delta))
    ratio = D_over_delta if D == 0 else D_over_delta * (cmath.exp(D) - 1.0) / D
    P = float(zeta_regular_jet(1.0 + delta, 0)[0])
    mu = -cmath.exp(log_mu)
    return -(mu ** (n - 1)) * P * ratio / math.factorial(n - 1)


def _periodic_zeta(a: float, u: float, delta: float | None = None) -> complex:
    """F(a, u) = sum_{n>=1} e^{2 pi i n a} n^{-u} for real u > 1, non-integer u.

    Uses the expansion of Li_u(e^mu) in powers of mu = 2 pi i a' (a' <= 1/2);
    near integer u the two singular terms are combined analytically. ``delta``
    is u - round(u) when the caller knows it more accurately than u itself.
    """
    a = a - math.floor(a)
    conj = a > 0.5
    ap = 1.0 - a if conj else a
    if ap == 0.0:
        return complex(zeta(u))
    mu = 2j * math.pi * ap
    log_neg_mu = cmath.log(-mu)
    n_near = round(u)
    if delta is None:
        delta = u - n_near
    merged = 0.0 < abs(delta) < _NEAR_INT_DELTA and n_near >= 1
    if merged:
        terms = [_merged_singular_pair(n_near, delta, log_neg_mu)]
    else:
        terms = [special.gamma(1.0 - u) * cmath.exp((u - 1.0) * log_neg_mu)]
    term_k = 1.0 + 0j
    k = 0
    while True:
        if not (merged and k == n_near - 1):
            t = zeta(n_near - k + delta if merged else u - k) * term_k
            terms.append(t)
        if k > 8 and k > u and abs(t) < _EPS * abs(sum(terms)):
            break
        k += 1
        term_k *= mu / k
        if k > 400:
            raise DomainError("periodic zeta series failed to converge")
    val = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    return val.conjugate() if conj else val


def _hurwitz_negative(s: float, a: float) -> float:
    """zeta(s, a) for real s < -1/2 through Hurwitz's formula."""
    if s == int(s):
        m = int(-s)
        return -bernoulli_poly(m + 1, a) / (m + 1)
    shift = []
    while a > 1.0:
        a -= 1.0
        shift.append(a)
    u = 1.0 - s
    n_near = round(u)
    F = _periodic_zeta(a, u, -(s + (n_near - 1)))
    lg = math.lgamma(u) - u * LOG_2PI
    val = 2.0 * math.exp(lg) * (cmath.exp(-0.5j * math.pi * u) * F).real
    # zeta(s, a+1) = zeta(s, a) - a^(-s)
    return math.fsum([val] + [-(b ** (-s)) for b in shift])


def hurwitz_zeta(s: Scalar, a: float) -> Scalar:
    """Hurwitz zeta function zeta(s, a) = sum_{k>=0} (k+a)^(-s), a > 0."""
    if a <= 0:
        raise DomainError("hurwitz_zeta needs a > 0")
    if s == 1:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if _is_real(s) and float(s.real if isinstance(s, complex) else s) < -0.5:
        return _hurwitz_negative(float(s.real if isinstance(s, complex) else s), float(a))
    if not _is_real(s) and s.real < -0.5:
        raise DomainError("complex arguments need Re s >= -1/2")
    return _hurwitz_em_jet(s, float(a), 0)[0]


def hurwitz_zeta_jet(s: Scalar, a: float, n: int) -> np.ndarray:
    """Jet of s -> zeta(s, a); Euler-Maclaurin (accuracy degrades for s << 0)."""
    return _hurwitz_em_jet(s, float(a), n)


# ---------------------------------------------------------------------------
# Riemann zeta


def _laurent_regular_coeffs(m: int) -> np.ndarray:
    """Coefficients p_k of P(u) = (s-1) zeta(s) = sum p_k u^k, u = s - 1."""
    gam = constants().stieltjes
    p = np.zeros(m)
    p[0] = 1.0
    for k in range(1, m):
        p[k] = (-1) ** (k - 1) * gam[k - 1] / math.factorial(k - 1)
    return p


def _poly_jet(coeffs: np.ndarray, u0: Scalar, n: int) -> np.ndarray:
    """Jet at u0 of the polynomial sum coeffs[k] u^k."""
    dtype = complex if not _is_real(u0) else float
    out = np.zeros(n + 1, dtype=dtype)
    c = np.array(coeffs, dtype=dtype)
    for j in range(n + 1):
        out[j] = np.polynomial.polynomial.polyval(u0, c)
        c = np.polynomial.polynomial.polyder(c) / (j + 1)
        if len(c) == 0:
            break
    return out


def zeta_regular_jet(s: Scalar, n: int, radius: float = _LAURENT_RADIUS) -> np.ndarray:
    """Jet of P(s) = (s-1) zeta(s) from its Taylor series at s = 1.

    P is entire; ``radius`` bounds |s-1| to where the computed Stieltjes
    constants keep the series accurate.
    """
    u = s - 1
    if abs(u) > radius:
        raise DomainError(f"Laurent data is only used within {radius} of s = 1")
    return _poly_jet(_laurent_regular_coeffs(_STIELTJES_INTERNAL + 1), u, n)


def _zeta_fe_jet(s: float, n: int) -> np.ndarray:
    # zeta(s) = [2^s pi^(s-1) Gamma(1-s)] sin(pi s/2) zeta(1-s)
    g = np.zeros(n + 1)
    g[0] = s * math.log(2.0) + (s - 1.0) * LOG_PI + math.lgamma(1.0 - s)
    if n >= 1:
        g[1] = math.log(2.0) + LOG_PI - float(special.digamma(1.0 - s))
    for j in range(2, n + 1):
        g[j] = (-1) ** j * polygamma(j - 1, 1.0 - s) / math.factorial(j)
    A = jet_exp(g)
    sin = _trig_jet(s / 2.0, 0.5, n)
    zr = jet_reflect(_hurwitz_em_jet(1.0 - s, 1.0, n))
    return jet_mul(jet_mul(A, sin), zr)


_DIRECT_SUM_MIN = 60.0


def _zeta_direct_jet(s: float, n: int) -> np.ndarray:
    """Jet of sum_k k^-s for large s, where a handful of terms reach double precision."""
    out = np.zeros(n + 1)
    out[0] = 1.0
    k = 2
    while True:
        lk = math.log(k)
        w = math.exp(-s * lk)
        if w < 1e-18:
            break
        out += w * np.array([(-lk) ** j / math.factorial(j) for j in range(n + 1)])
        k += 1
    return out


def zeta_jet(s: Scalar, n: int) -> np.ndarray:
    """Jet of the Riemann zeta function at s != 1."""
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    u = s - 1
    if abs(u) < _LAURENT_RADIUS:
        # zeta = 1/u + P-regular part: P(u)/u, expanded
        reg = _poly_jet(_laurent_regular_coeffs(_STIELTJES_INTERNAL + 1)[1:], u, n)
        sing = np.array([(-1) ** j / u ** (j + 1) for j in range(n + 1)])
        return sing + reg
    if _is_real(s):
        sr = float(s.real if isinstance(s, complex) else s)
        if sr < -0.5:
            return _zeta_fe_jet(sr, n)
        if sr > _DIRECT_SUM_MIN:
            return _zeta_direct_jet(sr, n)
        return _hurwitz_em_jet(sr, 1.0, n)
    if s.real < -0.5:
        raise DomainError("complex zeta needs Re s >= -1/2")
    return _hurwitz_em_jet(s, 1.0, n)


def zeta(s: Scalar) -> Scalar:
    """Riemann zeta function (real or complex s, complex needs Re s >= -1/2)."""
    if _is_real(s):
        sr = float(s.real if isinstance(s, complex) else s)
        if sr <= 0 and sr == int(sr):
            m = int(-sr)
            return float((-1) ** m * bernoulli(m + 1) / (m + 1))
        return float(zeta_jet(sr, 0)[0])
    return complex(zeta_jet(s, 0)[0])


def zeta_deriv(n: int, s: Scalar) -> Scalar:
    """n-th derivative of zeta at s."""
    if not 0 <= n <= MAX_DERIVATIVE_ORDER:
        raise DomainError(f"derivative order must lie in [0, {MAX_DERIVATIVE_ORDER}]")
    if n == 0:
        return zeta(s)
    c = zeta_jet(s, n)[n] * math.factorial(n)
    return float(c) if _is_real(s) else complex(c)


def zeta_log_deriv(s: Scalar) -> Scalar:
    """zeta'(s)/zeta(s)."""
    if s == 1:
        raise PoleError("zeta'/zeta has a pole at s = 1")
    j = zeta_jet(s, 1)
    val = j[1] / j[0]
    return float(val) if _is_real(s) else complex(val)


def zeta_log_deriv_regular(u: Scalar) -> Scalar:
    """zeta'/zeta(1+u) + 1/u, analytic near u = 0 (|u| < 1/4)."""
    p = zeta_regular_jet(1 + u, 1)
    val = p[1] / p[0]
    return float(val) if _is_real(u) else complex(val)


def log_zeta_deriv(n: int, s: float) -> float:
    """n-th derivative of log|zeta| at real s (Faa di Bruno via jets)."""
    if not 1 <= n <= MAX_DERIVATIVE_ORDER:
        raise DomainError(f"derivative order must lie in [1, {MAX_DERIVATIVE_ORDER}]")
    s = float(s)
    if s == 1.0:
        raise PoleError("log zeta is singular at s = 1")
    u = s - 1.0
    if abs(u) < _LAURENT_RADIUS:
        g = jet_log(zeta_regular_jet(s, n))
        # minus log|u|
        return float((g[n] + (-1) ** n / (n * u**n)) * math.factorial(n))
    c = zeta_jet(s, n)
    if c[0] == 0.0:
        raise DomainError(f"zeta vanishes at s={s}")
    return float(jet_log(c)[n] * math.factorial(n))


# ---------------------------------------------------------------------------
# Gamma family


def log_gamma(z: float) -> float:
    if z <= 0:
        raise DomainError("log_gamma needs z > 0")
    return math.lgamma(z)


def digamma(z: float) -> float:
    if z <= 0:
        raise DomainError("digamma needs z > 0")
    return float(special.digamma(z))


def polygamma(n: int, z: float) -> float:
    """psi^(n)(z) = (-1)^(n+1) n! zeta(n+1, z) (scipy; near machine precision for z > 0)."""
    if n < 1:
        raise DomainError("polygamma order must be positive (use digamma for n = 0)")
    if z <= 0:
        raise DomainError("polygamma needs z > 0")
    return float(special.polygamma(n, z))


def log_gamma_jet(z: float, n: int, scale: float = 1.0) -> np.ndarray:
    """Jet of h -> log Gamma(z + scale*h)."""
    g = np.zeros(n + 1)
    g[0] = math.lgamma(z)
    if n >= 1:
        g[1] = scale * float(special.digamma(z))
    for j in range(2, n + 1):
        g[j] = scale**j * polygamma(j - 1, z) / math.factorial(j)
    return g


# ---------------------------------------------------------------------------
# Dirichlet beta


def _beta_cvz_jet(s: Scalar, n: int, terms: int = 48) -> np.ndarray:
    """Jet of beta(s) = sum_k (-1)^k (2k+1)^(-s) by Cohen-Rodriguez Villegas-Zagier.

    The same acceleration weights apply to the log-weighted alternating series
    of every derivative.
    """
    m = terms
    d = (3.0 + math.sqrt(8.0)) ** m
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    cplx = not _is_real(s)
    cols: list[list] = [[] for _ in range(n + 1)]
    for k in range(m):
        c = b - c
        L = math.log(2 * k + 1)
        p = c * (cmath.exp(-s * L) if cplx else math.exp(-s * L))
        for j in range(n + 1):
            cols[j].append(p * (-L) ** j / math.factorial(j))
        b = (k + m) * (k - m) * b / ((k + 0.5) * (k + 1))
    if cplx:
        return np.array([complex(math.fsum(x.real for x in col), math.fsum(x.imag for x in col)) / d for col in cols])
    return np.array([math.fsum(col) / d for col in cols])


def _beta_fe_factor_jet(s: float, n: int) -> np.ndarray:
    # beta(s) = [2^(1-s) pi^(s-1) Gamma(1-s)] cos(pi s/2) beta(1-s)
    g = np.zeros(n + 1)
    g[0] = (1.0 - s) * math.log(2.0) + (s - 1.0) * LOG_PI + math.lgamma(1.0 - s)
    if n >= 1:
        g[1] = -math.log(2.0) + LOG_PI - float(special.digamma(1.0 - s))
    for j in range(2, n + 1):
        g[j] = (-1) ** j * polygamma(j - 1, 1.0 - s) / math.factorial(j)
    return jet_mul(jet_exp(g), _trig_jet(s / 2.0, 0.5, n, cos=True))


def beta_jet(s: Scalar, n: int) -> np.ndarray:
    """Jet of Dirichlet beta at s (functional equation for real s < 0)."""
    if _is_real(s):
        sr = float(s.real if isinstance(s, complex) else s)
        if sr < 0:
            return jet_mul(_beta_fe_factor_jet(sr, n), jet_reflect(_beta_cvz_jet(1.0 - sr, n)))
        return _beta_cvz_jet(sr, n)
    if s.real < 0:
        raise DomainError("complex beta needs Re s >= 0")
    return _beta_cvz_jet(complex(s), n, terms=64)


def beta(s: Scalar) -> Scalar:
    """Dirichlet beta function (L-series of the character mod 4)."""
    if _is_real(s):
        sr = float(s.real if isinstance(s, complex) else s)
        if sr < 0:
            if sr == int(sr):
                return euler_number(int(-sr)) / 2.0
            return float(_beta_fe_factor_jet(sr, 0)[0] * _beta_cvz_jet(1.0 - sr, 0)[0])
        return float(_beta_cvz_jet(sr, 0)[0])
    return complex(beta_jet(s, 0)[0])


def beta_deriv(n: int, s: Scalar) -> Scalar:
    """n-th derivative of beta at s."""
    if not 0 <= n <= MAX_DERIVATIVE_ORDER:
        raise DomainError(f"derivative order must lie in [0, {MAX_DERIVATIVE_ORDER}]")
    if n == 0:
        return beta(s)
    c = beta_jet(s, n)[n] * math.factorial(n)
    return float(c) if _is_real(s) else complex(c)


def log_beta_deriv(n: int, s: float) -> float:
    """n-th derivative of log|beta| at real s."""
    c = beta_jet(float(s), n)
    if c[0] == 0.0:
        raise DomainError(f"beta vanishes at s={s}")
    return float(jet_log(c)[n] * math.factorial(n))


# ---------------------------------------------------------------------------
# von Mangoldt


def von_mangoldt(n: int) -> float:
    """Lambda(n) = log p if n = p^r, else 0."""
    if n < 1:
        raise DomainError("von_mangoldt needs n >= 1")
    if n == 1:
        return 0.0
    p = _smallest_prime_factor(n)
    m = n
    while m % p == 0:
        m //= p
    return math.log(p) if m == 1 else 0.0


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


@lru_cache(maxsize=8)
def prime_power_table(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """Sorted prime powers n <= limit and their Lambda(n), via a sieve."""
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    ns, lam = [], []
    for p in np.nonzero(sieve)[0]:
        p = int(p)
        lp = math.log(p)
        q = p
        while q <= limit:
            ns.append(q)
            lam.append(lp)
            q *= p
    order = np.argsort(ns)
    return np.asarray(ns, dtype=float)[order], np.asarray(lam)[order]


# ---------------------------------------------------------------------------
# Completed zeta Xi(s) = s(s-1) pi^(-s/2) Gamma(s/2) zeta(s)


def log_xi_jet(s: float, n: int) -> np.ndarray:
    """Jet of log Xi at real s; uses Xi(s) = Xi(1-s) for s < 1/2.

    Written as Xi(s) = 2 Gamma(1+s/2) pi^(-s/2) (s-1) zeta(s) so that the
    factors s and s-1 never cancel against Gamma(s/2) or zeta in high orders.
    """
    s = float(s)
    if s < 0.5:
        return jet_reflect(log_xi_jet(1.0 - s, n))
    g = log_gamma_jet(1.0 + s / 2.0, n, 0.5)
    g[0] += math.log(2.0) - 0.5 * s * LOG_PI
    if n >= 1:
        g[1] -= 0.5 * LOG_PI
    u = s - 1.0
    if abs(u) <= _XI_LAURENT_RADIUS:
        g = g + jet_log(zeta_regular_jet(s, n, radius=_XI_LAURENT_RADIUS))
    else:
        lin_u = np.zeros(n + 1)
        lin_u[0] = u
        if n >= 1:
            lin_u[1] = 1.0
        g = g + jet_log(lin_u) + jet_log(zeta_jet(s, n))
    return g


def completed_xi(s: float) -> float:
    """Xi(s) = zeta(s)/F(s), entire and symmetric under s -> 1 - s."""
    return math.exp(float(log_xi_jet(float(s), 0)[0]))


def log_completed_xi(s: float) -> float:
    return float(log_xi_jet(float(s), 0)[0])


def log_xi_deriv(n: int, s: float) -> float:
    """n-th derivative of log Xi at real s."""
    if not 1 <= n <= 2 * MAX_DERIVATIVE_ORDER:
        raise DomainError("log_xi_deriv order out of range")
    return float(log_xi_jet(float(s), n)[n] * math.factorial(n))
