"""The literal nested alternating series over 1/f(n) and its oracles.

A depth-d chain is an index tuple (i, j, k1, ..., k_{d-2}) with
2 <= i <= j < k1 < ... < k_{d-2} <= x: the first two indices may
coincide, all later ones strictly increase.  The depth-d magnitude is the
sum of prod 1/f(index) over all such chains; the series signs alternate
as (-1)**(d-1), so depth 2 enters negatively.

The ranges are implemented exactly as stated, even though exact expansion
shows they do not reproduce Z*P - 1; compare_to_residual measures the gap
instead of correcting it.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DepthExceedsSupportWarning, LimitsTooLargeError
from .numerics import EXACT, FLOAT, KahanSum, PrecisionValue
from .residual import residual

_ENUM_MAX_X = 12
_ENUM_MAX_DEPTH = 8
_EXPANSION_MAX_X = 16
_FLOAT_TERM_CUTOFF = 1e-16  # relative, two consecutive depths


def max_chain_depth(x: int) -> int:
    """Largest depth with a nonzero chain: (2, 2, 3, 4, ..., x) has depth x."""
    return x


def _reciprocals(poly, x: int, exact: bool):
    # index 0..x, entries 2..x used
    if exact:
        return [None, None] + [Fraction(1, poly(n)) for n in range(2, x + 1)]
    return [0.0, 0.0] + [1.0 / poly(n) for n in range(2, x + 1)]


def sigma_chain(poly, x: int, depth: int, mode: str = EXACT) -> PrecisionValue:
    """Unsigned magnitude of the depth-d term, by backward suffix DP.

    E_m(t) counts (weighted) strictly increasing chains of length m inside
    [t, x]: E_0 = 1, E_m(t) = E_m(t+1) + a_t * E_{m-1}(t+1).  The result is
    sum_i a_i * sum_{j>=i} a_j * E_{d-2}(j+1), O(x * d) operations.
    """
    if x < 2:
        raise ValueError(f"need x >= 2, got {x}")
    if depth < 2:
        raise ValueError(f"need depth >= 2, got {depth}")
    exact = mode == EXACT
    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0
    if depth > max_chain_depth(x):
        warnings.warn(
            f"no depth-{depth} chain fits below x={x}",
            DepthExceedsSupportWarning,
            stacklevel=2,
        )
        return PrecisionValue.exact(0) if exact else PrecisionValue.compensated(0.0)

    a = _reciprocals(poly, x, exact)
    # E[t] for the current chain length m, indices 2..x+1
    e = [one] * (x + 2)
    for _ in range(depth - 2):
        new = [zero] * (x + 2)
        for t in range(x, 1, -1):
            new[t] = new[t + 1] + a[t] * e[t + 1]
        e = new
    # suffix[i] = sum_{j=i}^{x} a_j * E_{d-2}(j+1)
    total = zero
    suffix = zero
    for i in range(x, 1, -1):
        suffix = suffix + a[i] * e[i + 1]
        total = total + a[i] * suffix
    if exact:
        return PrecisionValue.exact(total)
    return PrecisionValue.compensated(total)


@dataclass(frozen=True)
class MSeriesTerm:
    depth: int
    sign: int
    magnitude: PrecisionValue


@dataclass(frozen=True)
class MSeriesExpansion:
    label: str
    x: int
    max_depth: int
    terms: tuple[MSeriesTerm, ...]
    partial_sum: PrecisionValue
    residual_reference: PrecisionValue
    deviation: PrecisionValue

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "x": self.x,
            "depth": self.max_depth,
            "terms": [
                {"d": t.depth, "sign": t.sign, "magnitude": _num_str(t.magnitude)}
                for t in self.terms
            ],
            "partial_sum": _num_str(self.partial_sum),
            "residual": _num_str(self.residual_reference),
            "deviation": _num_str(self.deviation),
        }


def _num_str(v: PrecisionValue) -> str:
    if v.mode == EXACT:
        return str(v.rational)
    return repr(v.value)


def _assemble(poly, x, max_depth, mode, magnitudes) -> MSeriesExpansion:
    exact = mode == EXACT
    terms = []
    if exact:
        partial = Fraction(0)
        for d, mag in magnitudes:
            sign = (-1) ** (d - 1)
            terms.append(MSeriesTerm(d, sign, mag))
            partial += sign * mag.rational
        partial_pv = PrecisionValue.exact(partial)
    else:
        acc = KahanSum()
        for d, mag in magnitudes:
            sign = (-1) ** (d - 1)
            terms.append(MSeriesTerm(d, sign, mag))
            acc.add(sign * mag.value)
        partial_pv = PrecisionValue.compensated(*acc.as_pair())
    ref = residual(poly, x, 1, mode).m_value
    if exact:
        dev = PrecisionValue.exact(ref.rational - partial_pv.rational)
    else:
        dev = PrecisionValue.compensated(ref.value - partial_pv.value)
    return MSeriesExpansion(
        label=poly.label,
        x=x,
        max_depth=max_depth,
        terms=tuple(terms),
        partial_sum=partial_pv,
        residual_reference=ref,
        deviation=dev,
    )


def mseries_literal(
    poly, x: int, max_depth: int | None = None, mode: str = EXACT
) -> MSeriesExpansion:
    """Signed sum over depths 2..max_depth of the literal series.

    max_depth None means full depth, the largest depth with a nonzero
    chain for this x.  In float mode the depth loop stops early once two
    consecutive term magnitudes fall below 1e-16 of the running sum.
    """
    if max_depth is None:
        max_depth = max_chain_depth(x)
    if max_depth < 2:
        raise ValueError(f"need max_depth >= 2, got {max_depth}")
    magnitudes = []
    running = 0.0
    tiny_streak = 0
    for d in range(2, max_depth + 1):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DepthExceedsSupportWarning)
            mag = sigma_chain(poly, x, d, mode)
        magnitudes.append((d, mag))
        if mode == FLOAT:
            running += (-1) ** (d - 1) * mag.value
            if abs(mag.value) < _FLOAT_TERM_CUTOFF * abs(running):
                tiny_streak += 1
                if tiny_streak >= 2:
                    break
            else:
                tiny_streak = 0
    return _assemble(poly, x, max_depth, mode, magnitudes)


def enumerate_oracle(
    poly, x: int, max_depth: int | None = None, mode: str = EXACT
) -> MSeriesExpansion:
    """Same contract as mseries_literal, computed by explicit tuple
    enumeration.  Exponential cost, so x and depth are hard-capped."""
    if max_depth is None:
        max_depth = max_chain_depth(x)
    if x > _ENUM_MAX_X or max_depth > _ENUM_MAX_DEPTH:
        raise LimitsTooLargeError(
            f"enumeration limited to x <= {_ENUM_MAX_X}, depth <= {_ENUM_MAX_DEPTH}"
        )
    exact = mode == EXACT
    a = _reciprocals(poly, x, exact)
    magnitudes = []
    for d in range(2, max_depth + 1):
        total = Fraction(0) if exact else 0.0
        for i in range(2, x + 1):
            for j in range(i, x + 1):
                base = a[i] * a[j]
                if d == 2:
                    total += base
                    continue
                for rest in combinations(range(j + 1, x + 1), d - 2):
                    term = base
                    for r in rest:
                        term = term * a[r]
                    total += term
        mag = (
            PrecisionValue.exact(total) if exact else PrecisionValue.compensated(total)
        )
        magnitudes.append((d, mag))
    return _assemble(poly, x, max_depth, mode, magnitudes)


def expansion_oracle(poly, x: int) -> PrecisionValue:
    """Exact residual by symbolic term-by-term expansion of Z * P - 1.

    Distributes every product factor (1 - a_n) over the running term list,
    the fully eliminated form the step-by-step procedure converges to.
    Equals residual(...).m_value by construction; exact mode only.
    """
    if x > _EXPANSION_MAX_X:
        raise LimitsTooLargeError(f"expansion limited to x <= {_EXPANSION_MAX_X}")
    leading = 1 if poly(1) > 1 else 0
    terms = [Fraction(leading)] if leading else []
    for n in range(1, x + 1):
        terms.append(Fraction(1, poly(n)))
    n0 = next((n for n in range(1, x + 1) if poly(n) >= 2), None)
    if n0 is not None:
        for n in range(n0, x + 1):
            neg = -Fraction(1, poly(n))
            terms = terms + [t * neg for t in terms]
    return PrecisionValue.exact(sum(terms, Fraction(0)) - 1)


@dataclass(frozen=True)
class ComparisonReport:
    label: str
    x: int
    max_depth: int
    mode: str
    partial_sum: PrecisionValue
    residual: PrecisionValue
    deviation: PrecisionValue
    verdict: str
    tolerance: float
    cutoff_depth: int | None = None

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "x": self.x,
            "depth": self.max_depth,
            "mode": self.mode,
            "partial_sum": _num_str(self.partial_sum),
            "residual": _num_str(self.residual),
            "deviation": _num_str(self.deviation),
            "verdict": self.verdict,
            "tolerance": self.tolerance,
            "cutoff_depth": self.cutoff_depth,
        }


MATCH = "MATCH"
SYSTEMATIC_GAP = "SYSTEMATIC_GAP"


def compare_to_residual(
    poly, x: int, max_depth: int | None = None, mode: str = EXACT,
    tolerance: float = 1e-12,
) -> ComparisonReport:
    """Deviation of the literal series from the residual at the same x.

    The deviation is residual minus literal partial sum, the sign
    convention under which every observed gap is nonnegative.  A gap at
    full depth is a finding (SYSTEMATIC_GAP), not a failure.
    """
    expansion = mseries_literal(poly, x, max_depth, mode)
    cutoff = None
    if mode == FLOAT:
        for t in expansion.terms:
            if abs(t.magnitude.value) < _FLOAT_TERM_CUTOFF:
                cutoff = t.depth
                break
    verdict = MATCH if abs(expansion.deviation.value) <= tolerance else SYSTEMATIC_GAP
    return ComparisonReport(
        label=poly.label,
        x=x,
        max_depth=expansion.max_depth,
        mode=mode,
        partial_sum=expansion.partial_sum,
        residual=expansion.residual_reference,
        deviation=expansion.deviation,
        verdict=verdict,
        tolerance=tolerance,
        cutoff_depth=cutoff,
    )
