from __future__ import annotations

import cmath
import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zzk import continuation as ct
from zzk import specfun as sf
from zzk.results import ConvergenceError, DomainError, PoleError

DATA = Path(__file__).parent / "data"


# -- zeta'/zeta on the half line -------------------------------------------


def test_log_deriv_limit_at_half():
    assert ct.log_deriv_zeta_half_plus(1e-9) == pytest.approx(2.68609171, abs=1e-7)


def test_log_deriv_regimes_agree_at_two():
    # both regimes at t = 3/2; the Dirichlet series tail there is ~1/N with
    # N capped at 2^18, so this comparison is limited to a few 1e-6
    a = ct._von_mangoldt_log_deriv(2.0)
    b = sf.zeta_log_deriv(2.0)
    assert a == pytest.approx(b, abs=1e-10)


@pytest.mark.parametrize("t", [4.0, 5.0, 8.0, 12.0])
def test_log_deriv_regimes_agree(t):
    a = ct._von_mangoldt_log_deriv(0.5 + t)
    b = sf.zeta_log_deriv(0.5 + t)
    assert a == pytest.approx(b, abs=1e-10)
    # across the switch point
    lo = ct.log_deriv_zeta_half_plus(ct.T_SWITCH - 1e-12)
    hi = ct.log_deriv_zeta_half_plus(ct.T_SWITCH)
    assert lo == pytest.approx(hi, rel=1e-12)


def test_log_deriv_far_right():
    val = ct.log_deriv_zeta_half_plus(20.0)
    two_terms = -(math.log(2) * 2**-20.5 + math.log(3) * 3**-20.5)
    assert val == pytest.approx(two_terms, rel=1e-6)


def test_log_deriv_pole():
    with pytest.raises(PoleError) as exc:
        ct.log_deriv_zeta_half_plus(0.5)
    assert exc.value.datum.residue == -1.0
    assert ct.log_deriv_zeta_half_plus(0.5, exclude_pv=True) == pytest.approx(sf.EULER_GAMMA, abs=1e-14)


@given(st.floats(0.05, 12.0))
def test_log_deriv_matches_mpmath(t):
    mp = pytest.importorskip("mpmath")
    if abs(t - 0.5) < 1e-6:
        return
    s = 0.5 + t
    ref = float(mp.zeta(s, 1, 1) / mp.zeta(s))
    assert ct.log_deriv_zeta_half_plus(t) == pytest.approx(ref, rel=1e-11, abs=1e-15)


# -- the continued Zcal ----------------------------------------------------


@pytest.mark.parametrize("sigma, printed, tol", [(0.25, 1.549060, 1e-5), (-0.25, 0.785321, 2e-6), (-0.75, 0.54319, 2e-5)])
def test_pv_printed_values(sigma, printed, tol):
    assert ct.continue_Zcal_pv(sigma).value == pytest.approx(printed, abs=tol)


def test_pv_trace_values():
    assert ct.continue_Zcal_pv(-1.0).value == pytest.approx(-9 / 32, abs=1e-6)
    assert ct.continue_Zcal_pv(-2.0).value == pytest.approx(3 / 128, abs=1e-6)
    assert ct.continue_Zcal_pv(0.0).value == pytest.approx(7 / 8, abs=1e-15)


@pytest.mark.parametrize("m, value", [(1, -9 / 32), (2, 3 / 128)])
def test_pv_continuous_at_traces(m, value):
    # the integral itself is used next to the integers; Zcal is smooth there,
    # so the symmetric mean converges to the trace like d^2
    # (the d^2 coefficient is ~300 at m = 2, between the poles at -3/2 and -5/2)
    for d in (1e-3, 1e-4, 1e-5):
        mid = 0.5 * (ct.continue_Zcal_pv(-m + d).value + ct.continue_Zcal_pv(-m - d).value)
        assert mid == pytest.approx(value, abs=1000 * d * d)


def test_pv_pole():
    with pytest.raises(PoleError) as exc:
        ct.continue_Zcal_pv(-0.5)
    assert exc.value.datum.residue == pytest.approx(-1 / (96 * math.pi), rel=1e-14)
    d = ct.continue_Zcal_pv(-1.5, allow_pole=True)
    assert d.residue == pytest.approx(-7 / (3840 * math.pi), rel=1e-14)


@pytest.mark.parametrize("sigma", [0.1, 0.25, 0.4])
def test_representations_agree(sigma):
    pv = ct.continue_Zcal_pv(sigma).value
    strip = ct.continue_Zcal_strip(sigma).value
    plus = ct.continue_Zcal_contour(sigma, 1).value
    minus = ct.continue_Zcal_contour(sigma, -1).value
    half = 0.5 * (plus + minus)
    assert abs(half.imag) < 1e-12
    assert pv == pytest.approx(strip, abs=1e-8)
    assert pv == pytest.approx(half.real, abs=1e-8)


def test_contour_half_sum_at_minus_quarter():
    plus = ct.continue_Zcal_contour(-0.25, 1).value
    minus = ct.continue_Zcal_contour(-0.25, -1).value
    assert (0.5 * (plus + minus)).real == pytest.approx(ct.continue_Zcal_pv(-0.25).value, abs=1e-8)


def test_contour_jump():
    sigma = -0.3
    jp = ct.contour_integral(sigma, 1).value
    jm = ct.contour_integral(sigma, -1).value
    assert abs((jp - jm) - 2j * math.pi * 2 ** (2 * sigma)) < 1e-8


def test_contour_at_zero():
    assert ct.continue_Zcal_contour(0.0, 1).value == pytest.approx(7 / 8, abs=1e-14)


@settings(max_examples=15)
@given(st.floats(-1.8, 0.45).filter(lambda s: min(abs(s + 0.5), abs(s + 1.5), abs(s - round(s))) > 1e-3))
def test_contour_conjugacy(sigma):
    plus = ct.continue_Zcal_contour(sigma, 1).value
    minus = ct.continue_Zcal_contour(sigma, -1).value
    assert abs(plus - minus.conjugate()) < 1e-10


@settings(max_examples=3)
@given(st.floats(-0.25, 0.4), st.floats(0.05, 2.0), st.booleans())
def test_contour_complex_sign_independent(x, y, flip):
    # complex arguments are supported for Re s >= -1/4; each point costs seconds
    s = complex(x, -y if flip else y)
    plus = ct.continue_Zcal_contour(s, 1).value
    minus = ct.continue_Zcal_contour(s, -1).value
    assert abs(plus - minus) < 1e-9 * max(1.0, abs(plus))


def test_contour_complex_domain():
    with pytest.raises(DomainError):
        ct.continue_Zcal_contour(complex(-0.3, 1.0), 1)


def test_contour_complex_matches_raw_sum_side():
    # Zcal(s) is analytic: the contour value at s close to 1/2 from the left
    # matches the conjugate-symmetric structure Zcal(conj s) = conj Zcal(s)
    s = complex(0.2, 0.3)
    a = ct.continue_Zcal_contour(s, 1).value
    b = ct.continue_Zcal_contour(s.conjugate(), 1).value
    assert abs(a - b.conjugate()) < 1e-10


def test_strip_against_cesaro(best_table):
    from zzk.series import cesaro_sum

    c = cesaro_sum(0.4, 0.0, best_table)
    s = ct.continue_Zcal_strip(0.4)
    assert abs(c.value - s.value) <= c.err + s.err + 5e-6


def test_strip_domain():
    with pytest.raises(DomainError):
        ct.continue_Zcal_strip(0.6)
    with pytest.raises(DomainError):
        ct.continue_Zcal_strip(-0.1)


# -- families --------------------------------------------------------------


def test_family_zeta_reproduces_pv():
    a = ct.continue_family(-0.25, ct.ZETA_FAMILY).value
    assert a == ct.continue_Zcal_pv(-0.25).value


def _beta_zeros_cesaro(sigma: float) -> float:
    """Cesaro mean of Euler-Maclaurin approximants over the beta zeros fixture.

    The smooth zero density of L(s, chi_4) is (1/2pi) log(4T/2pi).
    """
    t = np.loadtxt(DATA / "beta_zeros.txt")
    q = 2 * sigma - 1
    L = np.log(4 * t / (2 * math.pi))
    tails = t ** (-q) / q * (L + 1 / q) / (2 * math.pi)
    f = (t * t) ** (-sigma)
    head = np.concatenate(([0.0], np.cumsum(f)))[:-1]
    S = head + 0.5 * f + tails
    return float(S[len(S) // 2:].mean())


@pytest.mark.parametrize("sigma", [0.25, 0.1])
def test_family_beta_against_zeros(sigma):
    assert ct.continue_family(sigma, ct.BETA_FAMILY).value == pytest.approx(_beta_zeros_cesaro(sigma), abs=1e-3)


def test_family_beta_fixture_count():
    t = np.loadtxt(DATA / "beta_zeros.txt")
    assert t[0] == pytest.approx(6.020948904698, abs=1e-9)
    T = 600.0
    assert abs(len(t) - T / (2 * math.pi) * math.log(4 * T / (2 * math.pi * math.e))) < 3


def test_family_descriptor_invariant():
    with pytest.raises(DomainError):
        ct.ZetaFamilyDescriptor("bad", 2, lambda s: 0.0, lambda t: 0.0)


# -- asymptotics -----------------------------------------------------------


def test_asymptotic_one_term():
    expected = -math.gamma(13) * math.log(2) * 2**-0.5 * math.log(2) ** -13
    assert ct.asymptotic_J(-6.0, 1) == pytest.approx(expected, rel=1e-14)


def test_asymptotic_ratio():
    ratio = ct.J_zeta(-6.0) / ct.asymptotic_J(-6.0, 3)
    assert 0.99 <= ratio <= 1.01


def test_asymptotic_regime():
    with pytest.raises(DomainError):
        ct.asymptotic_J(-1.0, 3)


# -- poles and finite parts ------------------------------------------------


@pytest.mark.parametrize("mu, expected", [(-0.5, -1 / (96 * math.pi)), (-1.5, -7 / (3840 * math.pi))])
def test_probe_residue(mu, expected):
    res, err = ct.probe_residue(mu, ct.continue_Zcal_pv)
    assert res == pytest.approx(expected, abs=1e-6)
    assert err < 1e-6


def test_finite_part_at_half():
    fp0 = ct.finite_part_at_half("left", 0.0)
    fpq = ct.finite_part_at_half("left", 0.25)
    assert fp0.value == pytest.approx(0.251637, abs=2e-6)
    assert fpq.value == pytest.approx(0.251546, abs=2e-6)
    assert abs(fp0.value - fpq.value) < 1e-3


def test_finite_part_sides_agree():
    left = ct.finite_part_at_half("left", 0.0)
    right = ct.finite_part_at_half("right", 0.0)
    assert left.value == pytest.approx(right.value, abs=max(left.err + right.err, 1e-6))


def test_finite_part_side_validation():
    with pytest.raises(DomainError):
        ct.finite_part_at_half("middle")


# -- resolvent -------------------------------------------------------------


def test_resolvent_trace():
    assert ct.resolvent_trace(0.0) == pytest.approx(0.5 * (sf.LOG_PI - sf.digamma(1.25)), abs=1e-15)
    d = 1e-8
    assert d * -ct.resolvent_trace(-2.5 + d) == pytest.approx(-1.0, abs=1e-6)
    with pytest.raises(PoleError):
        ct.resolvent_trace(-2.5)


def test_ghost_term():
    assert ct.ghost_term(0.0) == 2.0
    with pytest.raises(PoleError):
        ct.ghost_term(0.5)


# -- Mellin one-strip continuation -----------------------------------------


def test_mellin_single_point_sequence():
    def L(z):
        return math.log1p(z), 1 / (1 + z), -1 / (1 + z) ** 2

    res = ct.mellin_continue_one_strip(L, mu0=1.0, sigma=0.5, nu0=1.0)
    assert res.integral.value == pytest.approx(2 * math.pi, abs=1e-9)


@given(st.floats(0.1, 0.99))
@settings(max_examples=10)
def test_mellin_single_point_property(sigma):
    def L(z):
        return math.log1p(z), 1 / (1 + z), -1 / (1 + z) ** 2

    res = ct.mellin_continue_one_strip(L, mu0=1.0, sigma=sigma, nu0=1.0)
    exact = math.pi / (sigma * math.sin(math.pi * sigma))
    # the truncation at log z = 60 costs ~e^(-60 sigma); it is reported in err
    assert abs(res.integral.value - exact) <= res.integral.err + 1e-12 * exact
    if sigma >= 0.4:
        assert res.integral.value == pytest.approx(exact, rel=1e-8)


def test_mellin_delta_function():
    from zzk.closedforms import log_delta_quarter

    def L(z):
        return tuple(float(x) for x in log_delta_quarter(z, 2))

    sigma = 0.75
    res = ct.mellin_continue_one_strip(L, mu0=0.5, sigma=sigma)
    Z = sigma * math.sin(math.pi * sigma) / math.pi * res.integral.value
    assert Z == pytest.approx(0.247730, abs=1e-3)
    assert Z == pytest.approx(0.2477297516, abs=1e-8)
    assert res.pole.lead == pytest.approx(0.25, abs=1e-10)
    assert res.pole.residue == pytest.approx(-0.5 * (1 + math.log(2 * math.pi)), abs=1e-9)
