from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zzk import closedforms as cf
from zzk import evaluate as evm
from zzk.evaluate import EVAL_METHODS, Evaluator, select_method, table2_cell
from zzk.results import DomainError, PoleError

from oracles import Z_quarter_mellin

# Zcal(sigma, 1/4) from the Mellin transform of log Delta (mpmath, 40 digits)
MELLIN = {
    0.75: 0.2477297515521964,
    0.25: 1.548828733926337,
    -0.25: 0.8008055262642275,
    -0.75: 0.8336190787429495,
}


@pytest.fixture(scope="module")
def ev(best_table):
    return Evaluator(table=best_table)


@pytest.fixture(scope="module")
def ev_bundled(bundled):
    return Evaluator(table=bundled)


def test_mellin_oracle_values_are_current():
    # the constants above are the oracle at its default settings
    assert Z_quarter_mellin(-0.25) == pytest.approx(MELLIN[-0.25], abs=1e-13)


@pytest.mark.parametrize("sigma", sorted(MELLIN))
def test_Z_against_mellin_oracle(ev, zeros_100k, sigma):
    r = Evaluator(table=zeros_100k).Zquarter(sigma)
    assert r.value == pytest.approx(MELLIN[sigma], abs=1e-8)


@pytest.mark.parametrize("sigma", [0.25, -0.25, -0.75])
def test_Z_against_mellin_oracle_bundled(ev_bundled, sigma):
    # the continued values need only Zcal at sigma > 1/2 and closed forms
    r = ev_bundled.Zquarter(sigma)
    assert r.value == pytest.approx(MELLIN[sigma], abs=1e-6)
    assert abs(r.value - MELLIN[sigma]) <= 10 * r.err + 1e-11


def test_Z_minus_three_quarters_is_not_the_printed_value(ev):
    # Table 2 prints 1.69388; the series route and the Mellin oracle agree elsewhere
    assert ev.Zquarter(-0.75).value == pytest.approx(0.8336190787, abs=1e-9)


# ---------------------------------------------------------------------------
# method selection


def _usable(method, sigma, v):
    if method == "closed":
        return evm._closed_form_available(sigma, v)
    if method == "expansion":
        return v != 0
    return evm._VALIDITY[method](sigma)


@given(st.floats(-4.0, 4.0), st.sampled_from([0.0, 0.25, 1.0]))
def test_auto_never_selects_an_invalid_method(sigma, v):
    if sigma == 0.5:
        return
    m = select_method(sigma, v)
    assert _usable(m, sigma, v)


@pytest.mark.parametrize("sigma", [0.0, 0.5, -1.0, 1.0])
@pytest.mark.parametrize("d", [1e-6, -1e-6])
def test_auto_near_boundaries(sigma, d):
    s = sigma + d
    m = select_method(s)
    assert _usable(m, s, 0.0)


def test_select_method_regions():
    assert select_method(2.0) == "closed"
    assert select_method(5.0) == "em"
    assert select_method(0.3) == "strip"
    assert select_method(0.3, 0.25) == "expansion"
    assert select_method(-0.3) == "pv"
    assert select_method(-1.0) == "closed"
    assert select_method(-0.5) == "closed"
    assert select_method(0.5) == "closed"
    assert select_method(complex(1.0, 2.0)) == "series"
    assert select_method(complex(0.2, 2.0)) == "contour"
    with pytest.raises(DomainError):
        select_method(complex(0.5, 1.0))


def test_auto_close_to_zero_and_half(ev):
    assert ev.Zcal(1e-6).value == pytest.approx(0.875, abs=1e-5)
    assert ev.Zcal(-1e-6).value == pytest.approx(0.875, abs=1e-5)
    # the double pole: (1/8pi) eps^-2 dominates on both sides
    for d in (1e-6, -1e-6):
        val = ev.Zcal(0.5 + d).value
        assert val == pytest.approx(1 / (8 * math.pi) / d**2, rel=1e-4)


@settings(max_examples=15)
@given(st.floats(-1.9, 2.5).filter(lambda s: min(abs(s - 0.5), abs(s + 0.5), abs(s + 1.5)) > 0.05))
def test_auto_matches_explicit_routes(ev, sigma):
    auto = ev.Zcal(sigma)
    assert math.isfinite(auto.value)
    if 0 < sigma < 0.5:
        other = ev.Zcal(sigma, "pv")
        assert auto.value == pytest.approx(other.value, abs=1e-8)
    elif sigma < 0.5 and not float(sigma).is_integer():
        other = ev.Zcal(sigma, "contour")
        assert auto.value == pytest.approx(other.value, abs=1e-8)


@pytest.mark.parametrize("sigma", [1.0, 2.0, 3.0])
def test_closed_and_series_agree_at_integers(ev, sigma):
    closed = ev.Zcal(sigma, "closed").value
    em = ev.Zcal(sigma, "em").value
    assert closed == pytest.approx(em, rel=1e-6)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("v", [0.25, 1.0])
def test_Zv_closed_and_series_agree(ev, n, v):
    closed = ev.Zv(float(n), v, "closed").value
    em = ev.Zv(float(n), v, "em").value
    assert closed == pytest.approx(em, rel=1e-7)
    assert select_method(float(n), v) == "closed"
    assert select_method(5.0, v) == "em"


def test_methods_and_domains(ev):
    with pytest.raises(DomainError):
        ev.Zcal(-0.3, "em")
    with pytest.raises(DomainError):
        ev.Zcal(0.3, "nope")
    with pytest.raises(DomainError):
        ev.Zcal(0.3, "closed")
    with pytest.raises(DomainError):
        ev.Zcal(0.8, "strip")
    assert set(EVAL_METHODS) >= set(evm._VALIDITY)


def test_results_are_cached(ev):
    assert ev.Zcal(0.3) is ev.Zcal(0.3)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_pole_data(ev, m):
    with pytest.raises(PoleError) as exc:
        ev.Zcal(0.5 - m)
    d = exc.value.datum
    assert d.location == 0.5 - m
    if m == 0:
        assert d.order == 2 and d.lead == pytest.approx(1 / (8 * math.pi))
    else:
        assert d.order == 1 and d.residue == pytest.approx(cf.residue_Zcal(m), rel=1e-14)
    with pytest.raises(PoleError) as exc:
        ev.Zv(0.5 - m, 0.25)
    assert exc.value.datum.lead == pytest.approx(cf.residue_Zv(m, 0.25)[0], rel=1e-14)


def test_traces_through_evaluator(ev):
    assert ev.Zcal(-1.0).value == -9 / 32
    assert ev.Zquarter(-1.0).value == -1 / 16
    assert ev.Zv(-1.0, 1.0).value == 19 / 32
    assert ev.Zcal(0.0).value == 0.875


# ---------------------------------------------------------------------------
# shifted and Hurwitz-type sums


def _hz_direct(table, sigma, a):
    t = table.ordinates.astype(complex) + a
    return complex(np.sum(t ** (-2 * sigma)))


def test_Hz_matches_direct_sum(ev_bundled, bundled):
    for a in (0.5, 0.5j, -1.0):
        got = complex(ev_bundled.Hz(3.0, a).value)
        ref = _hz_direct(bundled, 3.0, a)
        assert abs(got - ref) < 1e-9


def test_Hz_conjugation(ev_bundled):
    a = complex(ev_bundled.Hz(2.0, 0.5j).value)
    b = complex(ev_bundled.Hz(2.0, -0.5j).value)
    assert abs(a - b.conjugate()) < 1e-12


def test_Hz_poles(ev):
    with pytest.raises(PoleError) as exc:
        ev.Hz(0.0, 0.3)
    assert exc.value.datum.residue == pytest.approx(-0.3 / (4 * math.pi), rel=1e-14)
    with pytest.raises(PoleError):
        ev.Hz(0.5, 0.3)
    assert ev.Hz(0.3, 0.0) is ev.Zcal(0.3)


def test_xi_pole_and_trace(ev):
    with pytest.raises(PoleError) as exc:
        ev.xi(1, 0.5)
    assert exc.value.datum.residue == pytest.approx(-math.pi)
    y = 0.3
    h = 1e-3
    mid = 0.5 * (complex(ev.xi(-1.0 + h, 0.5 + y).value) + complex(ev.xi(-1.0 - h, 0.5 + y).value))
    assert mid.real == pytest.approx(cf.xi_trace(2, y), abs=1e-5)


def test_Zv_against_direct_sum(ev_bundled, bundled):
    t2 = bundled.ordinates**2
    for v in (-50.0, 3.0):
        ref = float(np.sum((t2 + v) ** -3.0))
        assert ev_bundled.Zv(3.0, v).value == pytest.approx(ref, rel=1e-9)


# ---------------------------------------------------------------------------
# Table 2 cells


def test_table2_cell_shapes(ev):
    cells = evm.table2_cells(ev)
    assert len(cells) == 22
    assert sum(c.exact for c in cells) == 4
    c = table2_cell(ev, "0", "Z")
    assert c.exact and c.passed and c.tol == 0.0
    with pytest.raises(DomainError):
        table2_cell(ev, "7", "Z")


@pytest.mark.parametrize("row", ["3/4", "1", "3/2", "2"])
@pytest.mark.parametrize("column", ["Z", "Zcal"])
def test_table2_right_half_with_bundled_table(ev_bundled, row, column):
    c = table2_cell(ev_bundled, row, column)
    assert c.diff <= max(c.tol, 1e-4)


def test_evaluate_dispatch(ev):
    assert ev.evaluate("Zcal", 2.0).value == ev.Zcal(2.0).value
    assert ev.evaluate("Zquarter", 2.0).value == ev.Zquarter(2.0).value
    with pytest.raises(DomainError):
        ev.evaluate("Zv", 2.0)
    with pytest.raises(DomainError):
        ev.evaluate("Hz", 2.0)
    with pytest.raises(DomainError):
        ev.evaluate("Xi-hurwitz", 2.0)
    with pytest.raises(DomainError):
        ev.evaluate("zeta", 2.0)
