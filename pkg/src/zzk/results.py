"""Result containers and error types shared by every module."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Union

Number = Union[float, complex]

METHODS = (
    "raw-sum",
    "euler-maclaurin",
    "cesaro",
    "expansion",
    "continuation",
    "closed-form",
)


class ZzkError(Exception):
    """Base class for errors raised by this package."""


class DomainError(ZzkError, ValueError):
    """An argument lies outside the region where an operation is defined."""


class PoleError(ZzkError, ValueError):
    """The requested point is a pole; ``datum`` describes it when known."""

    def __init__(self, message: str, datum: Optional["PolarDatum"] = None):
        super().__init__(message)
        self.datum = datum


class ConvergenceError(ZzkError, RuntimeError):
    """A numerical procedure failed to reach its tolerance."""


@dataclass(frozen=True)
class EvalResult:
    """A computed value with an absolute error estimate.

    ``work`` counts the terms summed or quadrature nodes consumed.
    """

    value: Number
    err: float
    method: str
    work: int = 0

    def __post_init__(self):
        if not self.err >= 0.0:
            raise ValueError(f"error estimate must be non-negative, got {self.err!r}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")

    def __float__(self) -> float:
        if isinstance(self.value, complex):
            if self.value.imag != 0.0:
                raise TypeError("complex result cannot be converted to float")
            return self.value.real
        return float(self.value)

    def to_dict(self) -> dict:
        d = asdict(self)
        if isinstance(self.value, complex):
            d["value"] = {"re": self.value.real, "im": self.value.imag}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "EvalResult":
        value = d["value"]
        if isinstance(value, dict):
            value = complex(value["re"], value["im"])
        return cls(value=value, err=float(d["err"]), method=d["method"], work=int(d["work"]))


@dataclass(frozen=True)
class PolarDatum:
    """Laurent data of a pole at ``location``.

    ``lead`` is the coefficient of eps**-2 and ``residue`` the coefficient of
    eps**-1; ``finite_part`` is the eps**0 term when it is known.
    """

    location: float
    order: int
    lead: float
    residue: float
    finite_part: Optional[float] = None

    def __post_init__(self):
        if self.order not in (1, 2):
            raise ValueError("pole order must be 1 or 2")
        if self.order == 2 and self.lead == 0.0:
            raise ValueError("a double pole needs a non-zero leading coefficient")
        if self.order == 1 and self.lead != 0.0:
            raise ValueError("a simple pole has no eps**-2 term")

    def polar_part(self, eps: Number) -> Number:
        return self.lead / eps**2 + self.residue / eps

    def to_dict(self) -> dict:
        return asdict(self)
