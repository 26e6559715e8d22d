"""Evaluation with automatic method selection.

Regions for Zcal(sigma, v) (real sigma):

* exact points (non-positive integers, small positive integers) -> closed forms
* sigma > 1/2 -> Euler-Maclaurin summation over the zeros table
* 0 < sigma < 1/2 -> regularized strip integral (PV form as fallback)
* sigma <= 0 -> principal-value continuation
* sigma = 1/2 - m -> PoleError carrying the polar data

Complex sigma uses the raw sum for Re sigma > 1/2 and the contour form below.
Shifted sums (v != 0, Hurwitz-type in a, xi) are built from Zcal by the
binomial expansions of ``series``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

from . import closedforms as cf
from . import continuation as cont
from . import series
from .results import ConvergenceError, DomainError, EvalResult, PoleError, PolarDatum
from .zeros import ZerosTable, default_zeros

Number = Union[float, complex]

EVAL_METHODS = ("auto", "series", "em", "cesaro", "pv", "contour", "strip", "closed")
FUNCTIONS = ("Zcal", "Zquarter", "Zv", "Hz", "Xi-hurwitz")


def _is_int(x: float) -> bool:
    return float(x).is_integer()


def _real(sigma: Number) -> Optional[float]:
    if isinstance(sigma, complex):
        return sigma.real if sigma.imag == 0 else None
    return float(sigma)


def select_method(sigma: Number, v: float = 0.0) -> str:
    """The method 'auto' uses at sigma (the closed-form points are checked first)."""
    s = _real(sigma)
    if s is None:
        if sigma.real > 0.5:
            return "series"
        if sigma.real < 0.5:
            return "contour"
        raise DomainError("Re sigma = 1/2 is not covered by any method")
    if _closed_form_available(s, v):
        return "closed"
    if s > 0.5:
        return "em"
    if 0 < s < 0.5:
        return "strip" if v == 0 else "expansion"
    if s == 0.5:
        return "closed"
    return "pv" if v == 0 else "expansion"


def _closed_form_available(s: float, v: float) -> bool:
    if _is_int(s) and s <= 0:
        return True
    if _is_int(0.5 - s) and s <= 0.5:
        return True  # pole
    if _is_int(s) and s >= 1:
        if v == 0:
            return s <= cf.ZCAL_VALUE_MAX
        # the closed forms are differences of O(1) quantities: their absolute
        # error is ~1e-17, adequate only while Zcal(n, v) ~ tau_1^(-2n) is large
        return v > 0 and s <= cf.ZN_V_MAX
    return False


_VALIDITY = {
    "series": lambda s: s.real > 0.5,
    "em": lambda s: isinstance(s, float) and s > 0 and s != 0.5,
    "cesaro": lambda s: isinstance(s, float) and series.CESARO_WINDOW[0] <= s < series.CESARO_WINDOW[1],
    "pv": lambda s: isinstance(s, float) and s < 0.5,
    "strip": lambda s: isinstance(s, float) and 0 < s < 0.5,
    "contour": lambda s: s.real < 0.5,
}


@dataclass
class Evaluator:
    """Evaluates the zeta functions over the zeros with a fixed table and quadrature setup."""

    table: Optional[ZerosTable] = None
    K: Optional[int] = None
    spec: cont.QuadratureSpec = field(default_factory=cont.QuadratureSpec)
    _cache: dict = field(default_factory=dict, repr=False)

    def zeros(self) -> ZerosTable:
        if self.table is None:
            self.table = default_zeros()
        return self.table

    # -- Zcal(sigma) = Zcal(sigma, 0) --------------------------------------

    def Zcal(self, sigma: Number, method: str = "auto") -> EvalResult:
        key = ("Zcal", sigma, method)
        if key not in self._cache:
            self._cache[key] = self._Zcal(sigma, method)
        return self._cache[key]

    def _Zcal(self, sigma: Number, method: str) -> EvalResult:
        if method not in EVAL_METHODS:
            raise DomainError(f"unknown method {method!r}")
        s = _real(sigma)
        if s is not None:
            sigma = s
        if method == "auto":
            method = select_method(sigma, 0.0)
        if method == "closed":
            if not isinstance(sigma, float):
                raise DomainError("closed forms need real sigma")
            return self._Zcal_closed(sigma)
        if not _VALIDITY[method](sigma):
            raise DomainError(f"method {method!r} is not valid at sigma = {sigma}")
        if method == "series":
            return series.raw_partial_sum(sigma, 0.0, self.zeros(), self.K)
        if method == "em":
            return series.euler_maclaurin_sum(sigma, 0.0, self.zeros(), self.K)
        if method == "cesaro":
            return series.cesaro_sum(sigma, 0.0, self.zeros(), self.K)
        if method == "strip":
            try:
                return cont.continue_Zcal_strip(sigma, self.spec)
            except ConvergenceError:
                return cont.continue_Zcal_pv(sigma, self.spec)
        if method == "pv":
            return cont.continue_Zcal_pv(sigma, self.spec)
        # contour: both rays give the same value; take the + ray
        r = cont.continue_Zcal_contour(sigma, 1, self.spec)
        if isinstance(sigma, float):
            v = complex(r.value)
            return EvalResult(v.real, r.err + abs(v.imag), r.method, r.work)
        return r

    def _Zcal_closed(self, s: float) -> EvalResult:
        if _is_int(0.5 - s) and s <= 0.5:
            datum = cont._pole_datum_zcal(s)
            raise PoleError(f"Zcal has a pole at sigma = {s}", datum)
        if _is_int(s) and s <= 0:
            return EvalResult(float(cf.trace_Zcal(int(-s))), 0.0, "closed-form", 0)
        if _is_int(s) and 1 <= s <= cf.ZCAL_VALUE_MAX:
            val = cf.Zcal_value(int(s))
            # (log|zeta|)^(2m)(1/2) loses about 2m digits
            return EvalResult(val, 1e-14 * 10 ** (2 * s), "closed-form", 0)
        raise DomainError(f"no closed form for Zcal at sigma = {s}")

    # -- Zcal(sigma, v) ------------------------------------------------------

    def Zv(self, sigma: Number, v: float, method: str = "auto") -> EvalResult:
        if v == 0:
            return self.Zcal(sigma, method)
        key = ("Zv", sigma, v, method)
        if key not in self._cache:
            self._cache[key] = self._Zv(sigma, float(v), method)
        return self._cache[key]

    def _Zv(self, sigma: Number, v: float, method: str) -> EvalResult:
        if method not in EVAL_METHODS:
            raise DomainError(f"unknown method {method!r}")
        if v <= -cf_tau1_sq():
            raise DomainError("v must exceed -tau_1^2")
        s = _real(sigma)
        if s is not None:
            sigma = s
        if method == "auto":
            method = select_method(sigma, v)
        if method == "closed":
            if not isinstance(sigma, float) or not _closed_form_available(sigma, v):
                raise DomainError(f"no closed form at sigma = {sigma}, v = {v}")
            return self._Zv_closed(sigma, v)
        if method in ("series", "em", "cesaro"):
            if not _VALIDITY[method](sigma):
                raise DomainError(f"method {method!r} is not valid at sigma = {sigma}")
            fn = {"series": series.raw_partial_sum, "em": series.euler_maclaurin_sum,
                  "cesaro": series.cesaro_sum}[method]
            return fn(sigma, v, self.zeros(), self.K)
        # continuation methods act on the v = 0 function inside the expansion in v
        inner = "auto" if method == "expansion" else method
        return series.hurwitz_v(sigma, v, lambda x: self.Zcal(x, inner if _real(x) is None or _real(x) < 0.5 else "auto"))

    def _Zv_closed(self, s: float, v: float) -> EvalResult:
        if _is_int(0.5 - s) and s <= 0.5:
            m = int(0.5 - s)
            raise PoleError(f"Zcal(., v) has a pole at sigma = {s}", cf.polar_datum_Zv(m, v))
        if _is_int(s) and s <= 0:
            val = cf.trace_Zv(int(-s), v)
            return EvalResult(float(val), 0.0, "closed-form", 0)
        n = int(s)
        val = cf.Z_quarter_value(n) if v == 0.25 else cf.Zn_v(n, v)
        return EvalResult(val, 1e-15 * abs(val) + 1e-17, "closed-form", 0)

    def Zquarter(self, sigma: Number, method: str = "auto") -> EvalResult:
        return self.Zv(sigma, 0.25, method)

    # -- Hurwitz-type sums ---------------------------------------------------

    def Hz(self, sigma: Number, a: Number) -> EvalResult:
        """sum_k (tau_k + a)^(-2 sigma) through the expansion in a (|a| < tau_1)."""
        if a == 0:
            return self.Zcal(sigma)
        s = _real(sigma)
        if s is not None and _is_int(1 - 2 * s) and s <= 0.5:
            n = int(1 - 2 * s)
            if n == 0:
                raise PoleError("double pole at sigma = 1/2", cont._pole_datum_zcal(0.5))
            raise PoleError(f"simple pole at sigma = {s}", PolarDatum(s, 1, 0.0, cf.residue_hurwitz_a(n, a)))
        return series.hurwitz_a(sigma, a, self.Zcal)

    def xi(self, s: Number, x: Number) -> EvalResult:
        """xi(s, x) = (2 pi)^s sum_rho (x - rho)^-s."""
        if s == 1:
            raise PoleError("xi(s, x) has a simple pole at s = 1", PolarDatum(1.0, 1, 0.0, -math.pi))
        return series.xi_hurwitz(s, x, self.Zcal)

    # -- Finite parts --------------------------------------------------------

    def finite_part_at_half(self, v: float = 0.0, side: str = "left") -> EvalResult:
        return cont.finite_part_at_half(side, v, self.spec, zcal=self.Zcal)

    def derivative_at_zero(self, v: float = 0.0) -> EvalResult:
        return EvalResult(cf.derivative_at_zero(v), 1e-15, "closed-form", 0)

    def evaluate(self, function: str, sigma: Number, v: Optional[float] = None, a: Optional[Number] = None,
                 x: Optional[Number] = None, method: str = "auto") -> EvalResult:
        """Dispatch on a function name from FUNCTIONS."""
        if function == "Zcal":
            return self.Zcal(sigma, method)
        if function == "Zquarter":
            return self.Zquarter(sigma, method)
        if function == "Zv":
            if v is None:
                raise DomainError("Zv needs v")
            return self.Zv(sigma, v, method)
        if function == "Hz":
            if a is None:
                raise DomainError("Hz needs a")
            return self.Hz(sigma, a)
        if function == "Xi-hurwitz":
            if x is None:
                raise DomainError("Xi-hurwitz needs x")
            return self.xi(sigma, x)
        raise DomainError(f"unknown function {function!r}; choose from {', '.join(FUNCTIONS)}")


def cf_tau1_sq() -> float:
    from .zeros import TAU1_SQUARED

    return TAU1_SQUARED


@lru_cache(maxsize=1)
def default_evaluator() -> Evaluator:
    return Evaluator()


def Zcal(sigma: Number, method: str = "auto") -> EvalResult:
    """Zcal(sigma) with the default zeros table and quadrature settings."""
    return default_evaluator().Zcal(sigma, method)


def Zv(sigma: Number, v: float, method: str = "auto") -> EvalResult:
    return default_evaluator().Zv(sigma, v, method)


# ---------------------------------------------------------------------------
# Numerical table for Z = Zcal(., 1/4) and Zcal = Zcal(., 0)

# (row label, sigma or special tag, printed Z, printed Zcal); '*' marks exact entries
TABLE2_ROWS = (
    ("-1", -1.0, "-0.0625*", "-0.28125*"),
    ("-3/4", -0.75, "1.69388", "0.54319"),
    ("-1/4", -0.25, "0.800805", "0.785321"),
    ("0", 0.0, "0.875*", "0.875*"),
    ("derivative at 0", "d0", "0.8060429", "0.8118179"),
    ("1/4", 0.25, "1.548829", "1.549060"),
    ("finite part at 1/2", "fp", "0.251546", "0.251637"),
    ("3/4", 0.75, "0.247730", "0.247760"),
    ("1", 1.0, "0.0230957", "0.0231050"),
    ("3/2", 1.5, "0.0007287", "0.0007295"),
    ("2", 2.0, "0.0000371", "0.0000372"),
)


@dataclass(frozen=True)
class Table2Cell:
    row: str
    column: str
    printed: str
    result: EvalResult

    @property
    def exact(self) -> bool:
        return self.printed.endswith("*")

    @property
    def expected(self) -> float:
        return float(self.printed.rstrip("*"))

    @property
    def tol(self) -> float:
        """Two units of the last printed digit; zero for exact entries."""
        if self.exact:
            return 0.0
        return 2.0 * 10.0 ** -len(self.printed.split(".")[1])

    @property
    def diff(self) -> float:
        return abs(float(self.result.value) - self.expected)

    @property
    def passed(self) -> bool:
        return self.diff <= self.tol


def table2_cell(ev: Evaluator, row: str, column: str, method: str = "auto") -> Table2Cell:
    """Recompute one cell; ``method`` applies to the plain evaluation rows."""
    for label, point, z_str, zcal_str in TABLE2_ROWS:
        if label == row:
            break
    else:
        raise DomainError(f"unknown table row {row!r}")
    v = 0.25 if column == "Z" else 0.0
    if point == "d0":
        res = ev.derivative_at_zero(v)
    elif point == "fp":
        res = ev.finite_part_at_half(v)
    else:
        res = ev.Zv(point, v, method)
    return Table2Cell(row, column, z_str if column == "Z" else zcal_str, res)


def table2_cells(ev: Evaluator) -> list[Table2Cell]:
    return [table2_cell(ev, label, col) for label, *_ in TABLE2_ROWS for col in ("Z", "Zcal")]
