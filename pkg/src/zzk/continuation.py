"""Meromorphic continuation of the zeta functions over the zeros.

For sigma < 1/2 the sum over the zeros is replaced by Mellin-type integrals of
the logarithmic derivative g(t) = zeta'/zeta(1/2 + t) along the positive axis:

    Zcal(sigma) = [-Z(2 sigma) + 2^{2 sigma} cos 2 pi sigma] / (2 cos pi sigma)
                  + (sin pi sigma / pi) PV int_0^oo t^{-2 sigma} g(t) dt

where Z is the shadow zeta function of the trivial zeros. Equivalent forms
integrate along rays arg t = +-eps (no principal value) or, for
0 < sigma < 1/2, add 1/(t - 1/2) to the integrand to remove the pole.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy import integrate

from . import specfun as sf
from .results import ConvergenceError, DomainError, EvalResult, PoleError, PolarDatum
from .shadow import shadow_Z, shadow_Z_beta

Number = float | complex

T_SWITCH = 4.0
_PRIME_POWER_LIMIT = 1 << 18


@dataclass(frozen=True)
class QuadratureSpec:
    """Quadrature choices for the continuation integrals.

    ``upper_cut`` of None picks T_max from the exponential decay of g.
    """

    upper_cut: Optional[float] = None
    pv_window: float = 0.1
    scheme: str = "adaptive-gauss"
    abs_tol: float = 1e-13
    contour_angle: float = math.pi / 16

    def __post_init__(self):
        if self.upper_cut is not None and not self.upper_cut > 1:
            raise ValueError("upper_cut must exceed 1")
        if not 0 < self.pv_window < 0.25:
            raise ValueError("pv_window must lie in (0, 1/4)")
        if self.scheme != "adaptive-gauss":
            raise ValueError(f"unknown panel scheme {self.scheme!r}")
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if not 0 < self.contour_angle < math.pi / 4:
            raise ValueError("contour_angle must lie in (0, pi/4)")


DEFAULT_SPEC = QuadratureSpec()


# ---------------------------------------------------------------------------
# zeta'/zeta on the half line 1/2 + t


def _von_mangoldt_log_deriv(s: Number) -> Number:
    """-sum Lambda(n) n^-s, truncated where the integral tail bound drops below 1e-17 |value|."""
    sr = s.real if isinstance(s, complex) else s
    # tail ~ N^(1-sr)/(sr-1) against |value| ~ log2 * 2^-sr
    log_n = (math.log(1.0 / (1e-17 * math.log(2.0) * (sr - 1.0))) + sr * math.log(2.0)) / (sr - 1.0)
    N = min(_PRIME_POWER_LIMIT, max(8, int(math.exp(min(log_n, 40.0))) + 1))
    ns, lam = sf.prime_power_table(_PRIME_POWER_LIMIT)
    k = int(np.searchsorted(ns, N, side="right"))
    logs = np.log(ns[:k])
    if isinstance(s, complex):
        terms = lam[:k] * np.exp(-s * logs)
        return -complex(math.fsum(terms.real), math.fsum(terms.imag))
    return -math.fsum(lam[:k] * np.exp(-s * logs))


def log_deriv_zeta_half_plus(t: Number, exclude_pv: bool = False) -> Number:
    """zeta'/zeta(1/2 + t).

    Below Re t = 4 it comes from the Euler-Maclaurin jets of zeta, above from
    the von Mangoldt series. With ``exclude_pv`` the simple pole at t = 1/2 is
    removed, i.e. the analytic function g(t) + 1/(t - 1/2) is returned.
    """
    tr = t.real if isinstance(t, complex) else t
    u = t - 0.5
    if u == 0:
        if not exclude_pv:
            raise PoleError("zeta'/zeta(1/2 + t) has a simple pole at t = 1/2",
                            PolarDatum(location=0.5, order=1, lead=0.0, residue=-1.0))
        return sf.zeta_log_deriv_regular(0.0)
    if exclude_pv and abs(u) < 0.25:
        return sf.zeta_log_deriv_regular(u)
    if tr >= T_SWITCH:
        g = _von_mangoldt_log_deriv(0.5 + t)
    else:
        g = sf.zeta_log_deriv(0.5 + t)
    return g + 1.0 / u if exclude_pv else g


def beta_log_deriv_half_plus(t: Number) -> Number:
    """beta'/beta(1/2 + t)."""
    j = sf.beta_jet(0.5 + t, 1)
    val = j[1] / j[0]
    return complex(val) if isinstance(t, complex) else float(val)


# ---------------------------------------------------------------------------
# Zeta families


@dataclass(frozen=True)
class ZetaFamilyDescriptor:
    """One zeta function entering the generic continuation formula.

    ``log_deriv`` evaluates t -> zeta~'/zeta~(1/2 + t); for q = 1 the optional
    ``regular_part`` evaluates u -> zeta~'/zeta~(1 + u) + 1/u near u = 0.
    ``decay`` is the rate c in |log_deriv(t)| ~ e^{-c t}.
    """

    name: str
    q: int
    shadow: Callable[[float], float]
    log_deriv: Callable[[Number], Number]
    regular_part: Optional[Callable[[float], float]] = None
    decay: float = math.log(2.0)

    def __post_init__(self):
        if self.q not in (0, 1):
            raise DomainError(f"pole order q must be 0 or 1, got {self.q}")


ZETA_FAMILY = ZetaFamilyDescriptor(
    name="zeta",
    q=1,
    shadow=shadow_Z,
    log_deriv=log_deriv_zeta_half_plus,
    regular_part=sf.zeta_log_deriv_regular,
)

BETA_FAMILY = ZetaFamilyDescriptor(
    name="beta",
    q=0,
    shadow=shadow_Z_beta,
    log_deriv=beta_log_deriv_half_plus,
    decay=math.log(3.0),
)


# ---------------------------------------------------------------------------
# Quadrature helpers


@dataclass
class _Tally:
    err: float = 0.0
    nodes: int = 0

    def quad(self, f, a, b, **kw) -> float:
        kw.setdefault("limit", 200)
        kw.setdefault("epsabs", 1e-15)
        kw.setdefault("epsrel", 1e-13)
        val, err, info = integrate.quad(f, a, b, full_output=1, **kw)[:3]
        self.err += err
        self.nodes += int(info["neval"])
        return val


def _upper_cut(sigma_re: float, decay: float, spec: QuadratureSpec, start: float) -> float:
    if spec.upper_cut is not None:
        return max(spec.upper_cut, start + 1.0)
    # the integrand beyond T is ~ t^(-2 sigma) e^(-decay t); stop once that is
    # below abs_tol past the peak at t = -2 sigma / decay
    T = max(8.0, start + 1.0, 2.0 * max(0.0, -2.0 * sigma_re) / decay)
    while -2.0 * sigma_re * math.log(T) - decay * T > math.log(spec.abs_tol) - 5.0:
        T *= 1.25
    return T


def _panels(a: float, b: float) -> list[float]:
    pts = [a]
    x = 1.0
    while x < b:
        if x > a:
            pts.append(x)
        x *= 2.0
    pts.append(b)
    return pts


def _check_sigma(sigma: Number) -> None:
    re = sigma.real if isinstance(sigma, complex) else sigma
    if re >= 0.5:
        raise DomainError("continuation formulas need Re sigma < 1/2")


def _pole_datum_zcal(sigma: float) -> Optional[PolarDatum]:
    """Pole data of Zcal when sigma is one of its poles 1/2 - m."""
    m = 0.5 - sigma
    if m != int(m) or m < 0:
        return None
    m = int(m)
    from .closedforms import residue_Zcal

    if m == 0:
        return PolarDatum(0.5, 2, 1.0 / (8 * math.pi), -math.log(2 * math.pi) / (4 * math.pi))
    return PolarDatum(sigma, 1, 0.0, residue_Zcal(m))


# ---------------------------------------------------------------------------
# The integrals


def pv_integral(sigma: float, fam: ZetaFamilyDescriptor = ZETA_FAMILY,
                spec: QuadratureSpec = DEFAULT_SPEC) -> EvalResult:
    """PV int_0^oo t^{-2 sigma} g(t) dt for the family's log-derivative g (sigma < 1/2).

    Near t = 0 the algebraic weight is integrated exactly (QAWS). Inside the
    window |t - 1/2| < w the pole -q/(t - 1/2) is split off: the regular part is
    integrated directly and the pole part is the convergent integral of
    ((1/2 + u)^{-2 sigma} - 2^{2 sigma}) / u.
    """
    sigma = float(sigma)
    _check_sigma(sigma)
    tally = _Tally()
    w = spec.pv_window
    a, b = 0.5 - w, 0.5 + w
    g = fam.log_deriv
    alpha = -2.0 * sigma
    parts = [tally.quad(g, 0.0, a, weight="alg", wvar=(alpha, 0.0))]
    if fam.q and fam.regular_part is not None:
        reg = fam.regular_part
        parts.append(tally.quad(lambda u: (0.5 + u) ** alpha * reg(u), -w, w))
        c = 2.0**-alpha

        def pole_part(u: float) -> float:
            if u == 0.0:
                return 2.0 * alpha * c
            return c * math.expm1(alpha * math.log1p(2.0 * u)) / u

        parts.append(-fam.q * tally.quad(pole_part, -w, w))
    elif fam.q:
        # pair u with -u so the odd pole terms cancel under the integral
        parts.append(tally.quad(lambda u: (0.5 + u) ** alpha * g(0.5 + u)
                                + (0.5 - u) ** alpha * g(0.5 - u), 0.0, w))
    else:
        parts.append(tally.quad(lambda t: t**alpha * g(t), a, b))
    T = _upper_cut(sigma, fam.decay, spec, b)
    pts = _panels(b, T)
    for lo, hi in zip(pts[:-1], pts[1:]):
        parts.append(tally.quad(lambda t: t**alpha * g(t), lo, hi))
    value = math.fsum(parts)
    return EvalResult(value, tally.err + spec.abs_tol, "continuation", tally.nodes)


def strip_integral(sigma: float, spec: QuadratureSpec = DEFAULT_SPEC) -> EvalResult:
    """int_0^oo t^{-2 sigma} [g(t) + 1/(t - 1/2)] dt for 0 < sigma < 1/2."""
    sigma = float(sigma)
    if not 0 < sigma < 0.5:
        raise DomainError("the regularized integral needs 0 < sigma < 1/2")
    tally = _Tally()
    w = spec.pv_window
    a, b = 0.5 - w, 0.5 + w
    alpha = -2.0 * sigma

    def f(t: float) -> float:
        return log_deriv_zeta_half_plus(t, exclude_pv=True)

    parts = [tally.quad(f, 0.0, a, weight="alg", wvar=(alpha, 0.0))]
    parts.append(tally.quad(lambda u: (0.5 + u) ** alpha * sf.zeta_log_deriv_regular(u), -w, w))
    T = _upper_cut(sigma, math.log(2.0), spec, b)
    pts = _panels(b, T)
    for lo, hi in zip(pts[:-1], pts[1:]):
        parts.append(tally.quad(lambda t: t**alpha * log_deriv_zeta_half_plus(t), lo, hi))
        parts.append(tally.quad(lambda t: t**alpha / (t - 0.5), lo, hi))
    # int_T^oo t^{-2 sigma}/(t - 1/2) dt = sum_k 2^-k T^{-2 sigma - k}/(2 sigma + k)
    tail = []
    k = 0
    while True:
        term = 0.5**k * T ** (alpha - k) / (-alpha + k)
        tail.append(term)
        if term < 1e-18 * tail[0]:
            break
        k += 1
    parts.append(math.fsum(tail))
    return EvalResult(math.fsum(parts), tally.err + spec.abs_tol, "continuation", tally.nodes)


def contour_integral(sigma: Number, sign: int, fam: ZetaFamilyDescriptor = ZETA_FAMILY,
                     spec: QuadratureSpec = DEFAULT_SPEC) -> EvalResult:
    """J(sigma) along the ray t = r e^{sign * i eps}, r > 0 (no principal value needed)."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    _check_sigma(sigma)
    theta = sign * spec.contour_angle
    rot = cmath.exp(1j * theta)
    sr = sigma.real if isinstance(sigma, complex) else float(sigma)
    si = sigma.imag if isinstance(sigma, complex) else 0.0
    alpha = -2.0 * sr
    tally = _Tally()

    def f(r: float) -> complex:
        val = fam.log_deriv(r * rot)
        if si:
            val *= cmath.exp(-2j * si * math.log(r)) if r > 0 else 0.0
        return val

    re_parts, im_parts = [], []
    # weighted first panel; complex integrand split into real and imaginary parts
    cache: dict[float, complex] = {}

    def fc(r: float) -> complex:
        if r not in cache:
            cache[r] = f(r)
        return cache[r]

    first = 1.0
    re_parts.append(tally.quad(lambda r: fc(r).real, 0.0, first, weight="alg", wvar=(alpha, 0.0)))
    im_parts.append(tally.quad(lambda r: fc(r).imag, 0.0, first, weight="alg", wvar=(alpha, 0.0)))
    T = _upper_cut(sr, fam.decay * math.cos(theta), spec, first)
    pts = _panels(first, T)
    for lo, hi in zip(pts[:-1], pts[1:]):
        re_parts.append(tally.quad(lambda r: r**alpha * fc(r).real, lo, hi))
        im_parts.append(tally.quad(lambda r: r**alpha * fc(r).imag, lo, hi))
    integral = complex(math.fsum(re_parts), math.fsum(im_parts))
    value = cmath.exp(1j * theta * (1.0 - 2.0 * sigma)) * integral
    return EvalResult(value, tally.err + spec.abs_tol, "continuation", tally.nodes)


# ---------------------------------------------------------------------------
# Continued Zeta functions


def _shadow_complex(s: Number) -> Number:
    if isinstance(s, complex) and s.imag != 0:
        return 2.0 ** (-s) * complex(sf.hurwitz_zeta(s, 1.25))
    return shadow_Z(float(s.real if isinstance(s, complex) else s))


def _sin_pi(x: float) -> float:
    return sf._sinpi(x)


def _cos_pi(x: float) -> float:
    return sf._cospi(x)


def continue_Zcal_pv(sigma: float, spec: QuadratureSpec = DEFAULT_SPEC, allow_pole: bool = False):
    """Zcal(sigma) for sigma < 1/2 from the real principal-value representation.

    At a pole 1/2 - m, PoleError carries the PolarDatum; with ``allow_pole``
    the datum is returned instead.
    """
    return continue_family(sigma, ZETA_FAMILY, spec, allow_pole=allow_pole)


def continue_family(sigma: float, fam: ZetaFamilyDescriptor, spec: QuadratureSpec = DEFAULT_SPEC,
                    allow_pole: bool = False):
    """Generic continuation for a family with pole order q:

    [-Z~(2 sigma) + q 2^{2 sigma} cos 2 pi sigma]/(2 cos pi sigma)
        + (sin pi sigma/pi) PV int_0^oo t^{-2 sigma} (zeta~'/zeta~)(1/2 + t) dt,

    which for 0 < sigma < 1/2 equals the form with q/(t - 1/2) added under the integral.
    """
    sigma = float(sigma)
    _check_sigma(sigma)
    if fam is ZETA_FAMILY:
        datum = _pole_datum_zcal(sigma)
    else:
        datum = None
        if 0.5 - sigma == int(0.5 - sigma):
            raise PoleError(f"{fam.name} family: sigma = {sigma} is a pole of the continuation")
    if datum is not None:
        if allow_pole:
            return datum
        raise PoleError(f"Zcal has a pole at sigma = {sigma}", datum)
    cos1 = _cos_pi(sigma)
    sin1 = _sin_pi(sigma)
    head = -fam.shadow(2.0 * sigma)
    if fam.q:
        head += fam.q * 2.0 ** (2.0 * sigma) * _cos_pi(2.0 * sigma)
    head /= 2.0 * cos1
    if sin1 == 0.0:
        return EvalResult(head, 1e-15 * max(1.0, abs(head)), "continuation", 0)
    J = pv_integral(sigma, fam, spec)
    value = head + sin1 / math.pi * J.value
    return EvalResult(value, abs(sin1) / math.pi * J.err + 1e-15 * abs(head), "continuation", J.work)


def continue_Zcal_strip(sigma: float, spec: QuadratureSpec = DEFAULT_SPEC) -> EvalResult:
    """Zcal(sigma) on 0 < sigma < 1/2 from the pole-free regularized integral."""
    sigma = float(sigma)
    if not 0 < sigma < 0.5:
        raise DomainError("continue_Zcal_strip needs 0 < sigma < 1/2")
    S = strip_integral(sigma, spec)
    head = -shadow_Z(2.0 * sigma) / (2.0 * _cos_pi(sigma))
    sin1 = _sin_pi(sigma)
    value = head + sin1 / math.pi * S.value
    return EvalResult(value, sin1 / math.pi * S.err + 1e-15 * abs(head), "continuation", S.work)


def continue_Zcal_contour(sigma: Number, sign: int, spec: QuadratureSpec = DEFAULT_SPEC) -> EvalResult:
    """One of the two complex-conjugate ray representations (arg t = sign * eps)."""
    _check_sigma(sigma)
    real = not isinstance(sigma, complex) or sigma.imag == 0
    if real:
        sigma = float(sigma.real if isinstance(sigma, complex) else sigma)
        datum = _pole_datum_zcal(sigma)
        if datum is not None:
            raise PoleError(f"Zcal has a pole at sigma = {sigma}", datum)
        cos1, sin1 = _cos_pi(sigma), _sin_pi(sigma)
    else:
        if sigma.real < -0.25:
            # the shadow term needs zeta(2 sigma, 5/4), available for Re >= -1/2
            raise DomainError("complex sigma needs Re sigma >= -1/4 in the contour form")
        cos1, sin1 = cmath.cos(math.pi * sigma), cmath.sin(math.pi * sigma)
    head = (-_shadow_complex(2 * sigma) + 2.0 ** (2 * sigma) * cmath.exp(-sign * 2j * math.pi * sigma)) / (2 * cos1)
    if sin1 == 0:
        return EvalResult(complex(head), 1e-15 * max(1.0, abs(head)), "continuation", 0)
    J = contour_integral(sigma, sign, ZETA_FAMILY, spec)
    value = head + sin1 / math.pi * J.value
    return EvalResult(complex(value), abs(sin1) / math.pi * J.err + 1e-15 * abs(head), "continuation", J.work)


def continue_Zcal(sigma: float, spec: QuadratureSpec = DEFAULT_SPEC) -> EvalResult:
    """Zcal(sigma) for real sigma < 1/2: regularized strip form on (0, 1/2), PV form elsewhere."""
    sigma = float(sigma)
    if 0 < sigma < 0.5:
        return continue_Zcal_strip(sigma, spec)
    return continue_Zcal_pv(sigma, spec)


# ---------------------------------------------------------------------------
# Asymptotics, residues and finite parts


def asymptotic_J(sigma: float, n_terms: int) -> float:
    """-Gamma(1 - 2 sigma) sum Lambda(n) n^{-1/2} (log n)^{2 sigma - 1} over the first prime powers.

    The full series diverges; it is an asymptotic expansion for sigma -> -oo.
    """
    if sigma > -2:
        raise DomainError("asymptotic regime needs sigma <= -2")
    if n_terms < 1:
        raise DomainError("n_terms must be positive")
    ns, lam = sf.prime_power_table(max(64, 4 * n_terms * int(math.log(n_terms + 2) + 2) + 16))
    ns, lam = ns[:n_terms], lam[:n_terms]
    terms = lam * ns**-0.5 * np.log(ns) ** (2 * sigma - 1)
    return -math.gamma(1 - 2 * sigma) * math.fsum(terms)


def J_zeta(sigma: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Real PV integral int_0^oo t^{-2 sigma} zeta'/zeta(1/2 + t) dt (half-sum of the ray integrals)."""
    return pv_integral(sigma, ZETA_FAMILY, spec).value


def _richardson(values: Sequence[float], ratio: float = 2.0, orders: Sequence[int] = (1, 2)) -> tuple[float, float]:
    """Eliminate h^p terms successively from values at h, h/ratio, h/ratio^2, ..."""
    row = list(values)
    prev_best = row[-1]
    for p in orders:
        f = ratio**p
        row = [(f * row[i + 1] - row[i]) / (f - 1) for i in range(len(row) - 1)]
        if not row:
            break
        prev_best, best = row[-1] if len(row) > 1 else prev_best, row[-1]
    return best, abs(best - prev_best)


FP_DELTAS = (1e-2, 5e-3, 2.5e-3)
HALF_LEAD = 1.0 / (8.0 * math.pi)
HALF_RESIDUE = -math.log(2.0 * math.pi) / (4.0 * math.pi)


def finite_part_at_half(side: str = "left", v: float = 0.0, spec: QuadratureSpec = DEFAULT_SPEC,
                        zcal: Optional[Callable[[float], EvalResult]] = None) -> EvalResult:
    """Finite part at sigma = 1/2 of Zcal(sigma, v) = sum (tau_k^2 + v)^-sigma.

    The double-pole part 1/(8 pi eps^2) - log(2 pi)/(4 pi eps), which does not
    depend on v, is subtracted at sigma = 1/2 -+ delta and the remainder is
    extrapolated to delta = 0 (Richardson, orders 1 and 2). ``side`` 'left'
    uses the continuation below 1/2, 'right' the summed series above it; for
    v != 0 the expansion in v needs Zcal at sigma + l, supplied by ``zcal``.
    """
    if side not in ("left", "right"):
        raise DomainError("side must be 'left' or 'right'")
    if zcal is None:
        from .evaluate import Zcal as zcal
    sgn = -1.0 if side == "left" else 1.0
    vals, errs = [], []
    for d in FP_DELTAS:
        eps = sgn * d
        s = 0.5 + eps
        if v == 0:
            r = zcal(s)
        else:
            from .series import hurwitz_v

            r = hurwitz_v(s, v, zcal)
        vals.append(float(r.value) - (HALF_LEAD / eps**2 + HALF_RESIDUE / eps))
        errs.append(r.err)
    best, rich_err = _richardson(vals)
    # Richardson weights amplify input errors by at most (8+1)(2+1)/3
    err = rich_err + 9.0 * max(errs)
    return EvalResult(best, err, "continuation", 3)


def probe_residue(mu: float, evaluator: Callable[[float], EvalResult], deltas: Sequence[float] = FP_DELTAS) -> tuple[float, float]:
    """Residue at a simple pole mu from symmetric probes delta*(F(mu+delta) - F(mu-delta))/2, extrapolated."""
    vals = []
    for d in deltas:
        plus = float(evaluator(mu + d).value)
        minus = float(evaluator(mu - d).value)
        vals.append(0.5 * d * (plus - minus))
    return _richardson(vals, orders=(2, 4))


# ---------------------------------------------------------------------------
# Resolvent of the trivial zeros


def resolvent_trace(t: float) -> float:
    """R(t) = (1/2)[log pi - psi(5/4 + t/2)], the regularized resolvent trace of the trivial zeros."""
    z = 1.25 + 0.5 * t
    if z <= 0 and z == int(z):
        k = int(-z)
        raise PoleError(f"digamma pole at t = {t}",
                        PolarDatum(location=t, order=1, lead=0.0, residue=1.0 if k >= 0 else 0.0))
    from scipy import special

    return 0.5 * (sf.LOG_PI - float(special.digamma(z)))


def ghost_term(t: float) -> float:
    """Contribution -1/(t - 1/2) of the pole of zeta, a spectral point of multiplicity -1."""
    if t == 0.5:
        raise PoleError("ghost term has a pole at t = 1/2", PolarDatum(0.5, 1, 0.0, -1.0))
    return -1.0 / (t - 0.5)


# ---------------------------------------------------------------------------
# One-strip Mellin continuation (integration by parts)


@dataclass(frozen=True)
class StripContinuation:
    """I(sigma) continued across Re sigma = mu0, with the Laurent data of I at mu0."""

    integral: EvalResult
    pole: PolarDatum


def mellin_continue_one_strip(L: Callable[[float], tuple[float, float, float]], mu0: float, sigma: float,
                              spec: QuadratureSpec = DEFAULT_SPEC, nu0: float = 1.0,
                              mu1: Optional[float] = None, log_z_max: float = 60.0) -> StripContinuation:
    """Continue I(sigma) = int_0^oo L(z) z^{-sigma-1} dz across Re sigma = mu0.

    ``L`` returns (L, L', L'') at z. With g = L z^{-mu0} and h = (z g')', two
    integrations by parts give

        I(sigma) = (sigma - mu0)^{-2} int_0^oo h(z) z^{mu0 - sigma} dz,

    valid for mu1 < sigma < nu0 (sigma != mu0). The double-pole coefficient at
    mu0 is int h, and the residue is int_0^1 g' + int_1^oo (z g' - lead)/z.
    Integration runs over log z up to ``log_z_max``; beyond it the integrand is
    extrapolated geometrically into the error estimate (h is computed with a
    cancellation that grows like z^(mu0 - mu1), so the cut cannot move far out).
    L(z) must vanish like z^nu0 at 0 to full relative precision.
    """
    if not sigma < nu0:
        raise DomainError("sigma must lie left of the small-z exponent nu0")
    if mu1 is not None and not sigma > mu1:
        raise DomainError("sigma must lie right of the next exponent mu1")
    if sigma == mu0:
        raise PoleError("sigma sits on the continued pole")
    tally = _Tally()

    def parts(z: float) -> tuple[float, float]:
        l0, l1, l2 = L(z)
        zm = z ** (-mu0)
        g1 = zm * (l1 - mu0 * l0 / z)
        g2 = zm * (l2 - 2.0 * mu0 * l1 / z + mu0 * (mu0 + 1.0) * l0 / z / z)
        return g1, g1 + z * g2

    # substitute z = e^x: dz = z dx
    def integrand(x: float, power: float) -> float:
        z = math.exp(x)
        _, h = parts(z)
        return h * z ** (power + 1.0)

    lo = -min(700.0, max(60.0, 40.0 / (nu0 - sigma)))
    hi = log_z_max
    cuts = [lo, -20.0, -5.0, 0.0, 5.0, 20.0, hi]

    # the lead and residue integrals converge at z = 0 independently of sigma;
    # cutting them far out only integrates the rounding noise of h
    aux_cuts = [max(lo, -80.0)] + cuts[1:]

    def over_line(power: float, pts: list) -> float:
        return math.fsum(tally.quad(integrand, a, b, args=(power,)) for a, b in zip(pts[:-1], pts[1:]))

    body = over_line(mu0 - sigma, cuts)
    lead = over_line(0.0, aux_cuts)
    # geometric extrapolation of the discarded tail beyond log_z_max
    f_hi, f_lo = integrand(hi, mu0 - sigma), integrand(hi - 5.0, mu0 - sigma)
    tail = 0.0
    if f_lo != 0 and 0 < f_hi / f_lo < 1:
        tail = abs(f_hi) * 5.0 / math.log(f_lo / f_hi)
    elif f_hi != 0:
        tail = math.inf

    def g1_only(x: float) -> float:
        z = math.exp(x)
        return parts(z)[0] * z

    def tail_res(x: float) -> float:
        z = math.exp(x)
        return z * parts(z)[0] - lead

    res = math.fsum(tally.quad(g1_only, a, b) for a, b in zip(aux_cuts[:3], aux_cuts[1:4]))
    res += math.fsum(tally.quad(tail_res, a, b) for a, b in zip(aux_cuts[3:-1], aux_cuts[4:]))
    value = body / (sigma - mu0) ** 2
    if abs(lead) < 1e-10:
        datum = PolarDatum(mu0, 1, 0.0, res)
    else:
        datum = PolarDatum(mu0, 2, lead, res)
    err = (tally.err + tail) / (sigma - mu0) ** 2
    if not math.isfinite(err):
        raise ConvergenceError("integrand does not decay at large z; sigma is left of the strip")
    return StripContinuation(EvalResult(value, err, "continuation", tally.nodes), datum)
