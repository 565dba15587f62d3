"""Precision-tracked numbers: exact rationals and compensated binary floats.

Exact mode stores a `fractions.Fraction` and is the ground truth for every
tabulated case.  Float mode carries a binary64 value plus a running
compensation term (error-free transformations throughout), so accumulated
sums and products keep roughly double-double accuracy.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ExactRationalUnsupportedError

EXACT = "exact"
FLOAT = "float"

_SPLITTER = 134217729.0  # 2**27 + 1, Veltkamp splitting constant


def two_sum(a: float, b: float) -> tuple[float, float]:
    """Return (s, e) with s = fl(a+b) and a + b = s + e exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    """Return (p, e) with p = fl(a*b) and a * b = p + e exactly."""
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def dd_add(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    s, e = two_sum(ahi, bhi)
    e += alo + blo
    return two_sum(s, e)


def dd_mul(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    p, e = two_prod(ahi, bhi)
    e += ahi * blo + alo * bhi
    return two_sum(p, e)


class KahanSum:
    """Compensated (Neumaier) accumulator for a sum of floats."""

    __slots__ = ("total", "compensation")

    def __init__(self, start: float = 0.0):
        self.total = start
        self.compensation = 0.0

    def add(self, value: float) -> None:
        t, e = two_sum(self.total, value)
        self.total = t
        self.compensation += e

    def as_pair(self) -> tuple[float, float]:
        return self.total, self.compensation

    @property
    def value(self) -> float:
        return self.total + self.compensation


class CompensatedProduct:
    """Factor-by-factor product with a running first-order error term."""

    __slots__ = ("product", "error")

    def __init__(self, start: float = 1.0):
        self.product = start
        self.error = 0.0

    def multiply(self, factor: float) -> None:
        p, e = two_prod(self.product, factor)
        self.product = p
        self.error = self.error * factor + e

    def as_pair(self) -> tuple[float, float]:
        return self.product, self.error

    @property
    def value(self) -> float:
        return self.product + self.error


@dataclass(frozen=True)
class PrecisionValue:
    """A number carried either exactly or as a compensated float pair."""

    mode: str
    rational: Fraction | None = None
    approx: float = 0.0
    comp: float = 0.0

    @staticmethod
    def exact(value: Union[Fraction, int]) -> "PrecisionValue":
        return PrecisionValue(mode=EXACT, rational=Fraction(value))

    @staticmethod
    def compensated(approx: float, comp: float = 0.0) -> "PrecisionValue":
        return PrecisionValue(mode=FLOAT, approx=approx, comp=comp)

    @property
    def value(self) -> float:
        if self.mode == EXACT:
            return float(self.rational)
        return self.approx + self.comp

    def as_fraction(self) -> Fraction:
        if self.mode == EXACT:
            return self.rational
        return Fraction(self.approx) + Fraction(self.comp)

    def decimal_str(self, places: int = 14) -> str:
        """Fixed-point decimal string, rounded half-to-even."""
        with decimal.localcontext() as ctx:
            ctx.prec = 60
            if self.mode == EXACT:
                d = decimal.Decimal(self.rational.numerator) / decimal.Decimal(
                    self.rational.denominator
                )
            else:
                d = decimal.Decimal(self.approx) + decimal.Decimal(self.comp)
            q = d.quantize(
                decimal.Decimal(1).scaleb(-places), rounding=decimal.ROUND_HALF_EVEN
            )
        return format(q, "f")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if self.mode == EXACT:
            return f"PrecisionValue(exact {self.rational})"
        return f"PrecisionValue(float {self.approx!r} + {self.comp!r})"


def require_exactable_exponent(s, mode: str) -> None:
    """Exact mode supports only positive integer exponents."""
    if mode == EXACT and (s != int(s) or s < 1):
        raise ExactRationalUnsupportedError(
            f"exact mode needs a positive integer exponent, got s={s}"
        )


def format_float(value: float, places: int) -> str:
    """Round-half-even fixed-point formatting of a plain float."""
    with decimal.localcontext() as ctx:
        ctx.prec = 40
        q = decimal.Decimal(value).quantize(
            decimal.Decimal(1).scaleb(-places), rounding=decimal.ROUND_HALF_EVEN
        )
    return format(q, "f")
