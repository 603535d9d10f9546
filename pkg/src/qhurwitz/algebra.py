"""Exact scalars and truncated Laurent/power series.

Scalars are :class:`fractions.Fraction` throughout.  A :class:`TruncatedSeries`
stores the coefficients of ``var**min_exp .. var**(order-1)`` and an explicit
truncation order; every operation propagates the order pessimistically so no
coefficient is ever reported beyond what the operands determine.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

VARIABLES = ("epsilon", "beta", "z")
_LAURENT_VARIABLES = ("epsilon",)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

Scalar = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse ``"3/4"``, ``"-2"`` and the like into an exact Fraction.

    Decimal and exponent notation are rejected on purpose.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x: Scalar) -> str:
    return str(Fraction(x))


class SeriesError(ValueError):
    """Raised on an operation outside a series' domain."""


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum(coeffs[i] * var**(min_exp + i)) + O(var**order)``."""

    var: str
    min_exp: int
    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.var not in VARIABLES:
            raise SeriesError(f"unknown series variable {self.var!r}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != max(0, self.order - self.min_exp):
            raise SeriesError(
                f"expected {self.order - self.min_exp} coefficients, got {len(coeffs)}")
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        min_exp = self.min_exp + lead if lead < len(coeffs) else self.order
        coeffs = coeffs[lead:]
        if coeffs and min_exp < 0 and self.var not in _LAURENT_VARIABLES:
            raise SeriesError(f"negative exponents are not allowed for {self.var!r}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "min_exp", min_exp)

    # -- construction -------------------------------------------------

    @classmethod
    def from_coeffs(cls, var: str, coeffs: Iterable[Scalar], order: int,
                    min_exp: int = 0) -> "TruncatedSeries":
        """Build from a (possibly short or long) coefficient list starting at ``min_exp``."""
        cs = [Fraction(c) for c in coeffs]
        n = max(0, order - min_exp)
        cs = (cs + [Fraction(0)] * n)[:n]
        return cls(var, min_exp, tuple(cs), order)

    @classmethod
    def constant(cls, var: str, value: Scalar, order: int) -> "TruncatedSeries":
        return cls.from_coeffs(var, [value], order)

    @classmethod
    def monomial(cls, var: str, exp: int, order: int, coeff: Scalar = 1) -> "TruncatedSeries":
        return cls.from_coeffs(var, [coeff], order, min_exp=exp)

    # -- access -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int:
        """Exponent of the lowest nonzero coefficient (``order`` for the zero series)."""
        return self.min_exp

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise SeriesError("zero series has no leading coefficient")
        return self.coeffs[0]

    def coeff(self, k: int) -> Fraction:
        if k >= self.order:
            raise SeriesError(f"coefficient of {self.var}^{k} is beyond the truncation order {self.order}")
        if k < self.min_exp:
            return Fraction(0)
        return self.coeffs[k - self.min_exp]

    def coefficients(self, start: int, stop: int) -> list:
        """Coefficients of exponents ``start .. stop-1``."""
        return [self.coeff(k) for k in range(start, stop)]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot raise truncation order from {self.order} to {order}")
        lo = min(self.min_exp, order)
        return TruncatedSeries.from_coeffs(self.var, self.coefficients(lo, order), order, lo)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``var**k`` (exact; the order moves with it)."""
        return TruncatedSeries(self.var, self.min_exp + k, self.coeffs, self.order + k)

    # -- ring operations ----------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.var != self.var:
            raise SeriesError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(self.var, other, self.order)
        self._check(other)
        order = min(self.order, other.order)
        lo = min(self.min_exp, other.min_exp, order)
        cs = [self.coeff(k) + other.coeff(k) for k in range(lo, order)]
        return TruncatedSeries(self.var, lo, tuple(cs), order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.var, self.min_exp, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TruncatedSeries(self.var, self.min_exp, tuple(c * x for x in self.coeffs), self.order)
        self._check(other)
        order = min(self.order + other.min_exp, other.order + self.min_exp)
        lo = min(self.min_exp + other.min_exp, order)
        out = [Fraction(0)] * (order - lo)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            ea = self.min_exp + i
            for j, b in enumerate(other.coeffs):
                k = ea + other.min_exp + j - lo
                if k >= len(out):
                    break
                out[k] += a * b
        return TruncatedSeries(self.var, lo, tuple(out), order)

    __rmul__ = __mul__

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; a series of valuation v and order A inverts to order A - 2v."""
        if self.is_zero:
            raise ZeroDivisionError("inversion of the zero series")
        v = self.min_exp
        n = len(self.coeffs)
        a = self.coeffs
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, n):
            s = sum((a[j] * b[k - j] for j in range(1, k + 1)), Fraction(0))
            b.append(-s * inv0)
        return TruncatedSeries(self.var, -v, tuple(b), self.order - 2 * v)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        if k == 0:
            return TruncatedSeries.constant(self.var, 1, self.order)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.var, self.min_exp, self.coeffs, self.order) == (
            other.var, other.min_exp, other.coeffs, other.order)

    def __hash__(self):
        return hash((self.var, self.min_exp, self.coeffs, self.order))

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """Equality of coefficients on the common window (orders may differ)."""
        self._check(other)
        order = min(self.order, other.order)
        lo = min(self.min_exp, other.min_exp, order)
        return all(self.coeff(k) == other.coeff(k) for k in range(lo, order))

    # -- transcendental operations -----------------------------------

    def exp(self) -> "TruncatedSeries":
        if not self.is_zero and self.min_exp < 0:
            raise SeriesError("exp of a series with negative exponents")
        if not self.is_zero and self.min_exp == 0:
            raise SeriesError("exp of a series with nonzero constant term")
        n = max(self.order, 0)
        a = [self.coeff(k) for k in range(n)]
        b = [Fraction(1)] if n else []
        for m in range(1, n):
            s = sum((k * a[k] * b[m - k] for k in range(1, m + 1)), Fraction(0))
            b.append(s / m)
        return TruncatedSeries.from_coeffs(self.var, b, n)

    def log(self) -> "TruncatedSeries":
        if self.is_zero or self.min_exp != 0 or self.coeffs[0] != 1:
            raise SeriesError("log requires constant term 1")
        n = self.order
        a = [self.coeff(k) for k in range(n)]
        out = [Fraction(0)]
        for m in range(1, n):
            s = sum((k * out[k] * a[m - k] for k in range(1, m)), Fraction(0))
            out.append(a[m] - s / m)
        return TruncatedSeries.from_coeffs(self.var, out, n)

    def scale_variable(self, c: Scalar) -> "TruncatedSeries":
        """Substitute ``var -> c * var``."""
        c = Fraction(c)
        cs = [x * c ** (self.min_exp + i) for i, x in enumerate(self.coeffs)]
        return TruncatedSeries.from_coeffs(self.var, cs, self.order, self.min_exp)

    def rename(self, var: str) -> "TruncatedSeries":
        return TruncatedSeries(var, self.min_exp, self.coeffs, self.order)

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        return {
            "var": self.var,
            "min_exp": self.min_exp,
            "order": self.order,
            "coeffs": [format_rational(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        return cls(data["var"], int(data["min_exp"]),
                   tuple(parse_rational(c) for c in data["coeffs"]), int(data["order"]))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + i
            terms.append(f"({c})*{self.var}^{e}" if e else f"({c})")
        terms.append(f"O({self.var}^{self.order})")
        return " + ".join(terms)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    return a.invert()


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    return a.exp()


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    return a.log()


def series_product(factors: Sequence[TruncatedSeries], var: str, order: int) -> TruncatedSeries:
    out = TruncatedSeries.constant(var, 1, order)
    for f in factors:
        out = out * f
    return out


def exp_monomial(x: Scalar, order: int, var: str = "epsilon") -> TruncatedSeries:
    """``exp(x * var)`` truncated at ``var**order``; coefficients written down directly."""
    x = Fraction(x)
    return TruncatedSeries.from_coeffs(var, [x ** k / math.factorial(k) for k in range(max(order, 0))], order)


def q_power_expansion(x: int, order: int, *, companion: bool = False) -> TruncatedSeries:
    """Expansion in epsilon of ``q**(-x) - 1`` (or ``1 - q**x`` with ``companion``) at ``q = exp(-epsilon)``.

    Both have lowest term ``x * epsilon``.
    """
    if not isinstance(x, int) or x < 1:
        raise ValueError(f"q_power_expansion needs a positive integer, got {x!r}")
    sign = -1 if companion else 1
    e = exp_monomial(sign * x, order)
    return (e - 1) * sign
