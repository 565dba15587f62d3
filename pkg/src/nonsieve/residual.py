"""Truncated zeta sums, truncated Euler products, and the residual
M(x) = Z(x) * P(x) - 1 over an integer-valued polynomial's outputs.

The product starts at the first n with f(n) >= 2: starting at a unit
value would annihilate the whole product through the factor 1 - 1/1.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundViolationError, EmptyProductWarning, InsufficientDataError, NotMonotoneError
from .numerics import (
    EXACT,
    FLOAT,
    CompensatedProduct,
    KahanSum,
    PrecisionValue,
    dd_add,
    dd_mul,
    require_exactable_exponent,
)
from .polynomial import IntegerPolynomial, validate_monotone


def _is_constant_one(poly: IntegerPolynomial) -> bool:
    return poly.coefficients == (1,)


def start_index(poly: IntegerPolynomial, x: int) -> int | None:
    """Smallest n <= x with f(n) >= 2, or None if every value is 1."""
    for n in range(1, x + 1):
        if poly(n) >= 2:
            return n
    return None


def _check_preconditions(poly: IntegerPolynomial, x: int) -> None:
    if x < 1:
        raise ValueError(f"truncation limit must be >= 1, got {x}")
    if x >= 2 and not _is_constant_one(poly):
        report = validate_monotone(poly, x)
        if not report:
            raise NotMonotoneError(
                f"{poly.label} is not increasing at n={report.first_violation}"
            )


def _term(value: int, s) -> float:
    if s == 1:
        return 1.0 / value
    return float(value) ** -s


def zeta_partial(
    poly: IntegerPolynomial, x: int, s=1, mode: str = EXACT
) -> PrecisionValue:
    """[f(1) > 1] + sum_{n=1}^{x} 1/f(n)**s.

    When f(1) = 1 the term 1/f(1)**s itself supplies the leading 1, so no
    extra unit is added; when f(1) > 1 the leading 1 is explicit.
    """
    _check_preconditions(poly, x)
    require_exactable_exponent(s, mode)
    leading = 1 if poly(1) > 1 else 0
    if mode == EXACT:
        total = Fraction(leading)
        for n in range(1, x + 1):
            total += Fraction(1, poly(n) ** int(s))
        return PrecisionValue.exact(total)
    acc = KahanSum(float(leading))
    for n in range(1, x + 1):
        acc.add(_term(poly(n), s))
    return PrecisionValue.compensated(*acc.as_pair())


def euler_product_partial(
    poly: IntegerPolynomial, x: int, s=1, mode: str = EXACT
) -> PrecisionValue:
    """prod_{n=n0}^{x} (1 - 1/f(n)**s) with n0 the first n where f(n) >= 2.

    An empty range is the empty product 1, flagged with a warning rather
    than an error so family scans never abort.
    """
    _check_preconditions(poly, x)
    require_exactable_exponent(s, mode)
    n0 = start_index(poly, x)
    if n0 is None or x < n0:
        warnings.warn(
            f"{poly.label}: no factor with f(n) >= 2 up to x={x}",
            EmptyProductWarning,
            stacklevel=2,
        )
        return (
            PrecisionValue.exact(1)
            if mode == EXACT
            else PrecisionValue.compensated(1.0)
        )
    if mode == EXACT:
        prod = Fraction(1)
        for n in range(n0, x + 1):
            prod *= 1 - Fraction(1, poly(n) ** int(s))
        return PrecisionValue.exact(prod)
    acc = CompensatedProduct()
    for n in range(n0, x + 1):
        acc.multiply(1.0 - _term(poly(n), s))
    return PrecisionValue.compensated(*acc.as_pair())


@dataclass(frozen=True)
class ResidualResult:
    label: str
    x: int
    s: object
    start_index: int | None
    zeta_partial: PrecisionValue
    product_partial: PrecisionValue
    m_value: PrecisionValue
    empty_product: bool = False


def _combine(z: PrecisionValue, p: PrecisionValue, mode: str) -> PrecisionValue:
    """M = Z * P - 1 in the accumulation mode."""
    if mode == EXACT:
        return PrecisionValue.exact(z.rational * p.rational - 1)
    hi, lo = dd_mul(z.approx, z.comp, p.approx, p.comp)
    hi, lo = dd_add(hi, lo, -1.0, 0.0)
    return PrecisionValue.compensated(hi, lo)


def _make_result(
    poly: IntegerPolynomial,
    x: int,
    s,
    mode: str,
    z: PrecisionValue,
    p: PrecisionValue,
    n0: int | None,
) -> ResidualResult:
    m = _combine(z, p, mode)
    empty = n0 is None or x < n0
    if not empty and not -1.0 < m.value < 0.0:
        raise BoundViolationError(
            f"{poly.label}: M({x}) = {m.value!r} escaped (-1, 0)"
        )
    return ResidualResult(
        label=poly.label,
        x=x,
        s=s,
        start_index=n0,
        zeta_partial=z,
        product_partial=p,
        m_value=m,
        empty_product=empty,
    )


def residual(
    poly: IntegerPolynomial, x: int, s=1, mode: str = EXACT
) -> ResidualResult:
    """One (f, x, s) evaluation of the residual M = Z * P - 1."""
    z = zeta_partial(poly, x, s, mode)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", EmptyProductWarning)
        p = euler_product_partial(poly, x, s, mode)
    return _make_result(poly, x, s, mode, z, p, start_index(poly, x))


def residual_scan(
    poly: IntegerPolynomial, x_list, s=1, mode: str = EXACT
) -> list[ResidualResult]:
    """Residuals at each limit in ascending x_list, extending Z and P
    incrementally instead of recomputing from scratch."""
    x_list = list(x_list)
    if any(b <= a for a, b in zip(x_list, x_list[1:])):
        raise ValueError(f"limits must be strictly ascending: {x_list}")
    if not x_list:
        return []
    _check_preconditions(poly, x_list[-1])
    require_exactable_exponent(s, mode)

    leading = 1 if poly(1) > 1 else 0
    n0 = start_index(poly, x_list[-1])
    results = []
    if mode == EXACT:
        z = Fraction(leading)
        p = Fraction(1)
        n = 1
        for x in x_list:
            while n <= x:
                z += Fraction(1, poly(n) ** int(s))
                if n0 is not None and n >= n0:
                    p *= 1 - Fraction(1, poly(n) ** int(s))
                n += 1
            results.append(
                _make_result(
                    poly, x, s, mode,
                    PrecisionValue.exact(z), PrecisionValue.exact(p),
                    n0 if (n0 is not None and n0 <= x) else None,
                )
            )
    else:
        zacc = KahanSum(float(leading))
        pacc = CompensatedProduct()
        n = 1
        for x in x_list:
            while n <= x:
                t = _term(poly(n), s)
                zacc.add(t)
                if n0 is not None and n >= n0:
                    pacc.multiply(1.0 - t)
                n += 1
            results.append(
                _make_result(
                    poly, x, s, mode,
                    PrecisionValue.compensated(*zacc.as_pair()),
                    PrecisionValue.compensated(*pacc.as_pair()),
                    n0 if (n0 is not None and n0 <= x) else None,
                )
            )
    return results


@dataclass(frozen=True)
class LimitEstimate:
    estimate: float
    last_delta: float
    last_x: int


def limit_estimate(results: list[ResidualResult]) -> LimitEstimate:
    """Last M value plus the last inter-limit delta as a crude convergence
    diagnostic.  No extrapolation model is asserted."""
    if len(results) < 2:
        raise InsufficientDataError(
            f"need at least two scan results, got {len(results)}"
        )
    last, prev = results[-1], results[-2]
    if last.x <= prev.x:
        raise ValueError("results must be at ascending x")
    return LimitEstimate(
        estimate=last.m_value.value,
        last_delta=abs(last.m_value.value - prev.m_value.value),
        last_x=last.x,
    )
