"""Pearson correlation with exact Student-t two-tailed significance.

The p-value matches the classical test for zero correlation: under the null,
t = r*sqrt((n-2)/(1-r^2)) follows a Student t distribution with n-2 degrees
of freedom, and the two-tailed tail mass reduces to a single regularized
incomplete beta evaluation,

    p = 2 * (1 - T_cdf(|t|, df)) = I_x(df/2, 1/2)   with x = df/(df + t^2),

where x simplifies to exactly 1 - r^2. The incomplete beta is evaluated with
the continued fraction via the modified Lentz iteration, which is standard,
dependency-free, and accurate to well below the 1e-10 p-value target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .dates import DateWindow
from .errors import NoConvergence, TooFewPoints, ZeroVariance
from .mobility import MobilityCategory, MobilitySeries, category_series
from .series import AlignedPair, DailySeries, align

# Continued-fraction controls: relative tolerance per Lentz step, iteration
# cap, and the tiny floor that keeps the recurrence away from division by 0.
_CF_EPS = 1e-12
_CF_MAX_ITER = 300
_CF_FPMIN = 1e-300

MIN_POINTS = 3  # df = n - 2 must be >= 1


def pearson_r(pair: AlignedPair) -> float:
    """Pearson correlation coefficient of an aligned pair.

    Uses the centered two-pass formula with exactly-rounded summation, and
    clamps the result to [-1, 1] to absorb last-bit rounding. Raises
    TooFewPoints for n < 3 and ZeroVariance when a side is constant.
    """
    n = pair.n
    if n < MIN_POINTS:
        raise TooFewPoints(f"need at least {MIN_POINTS} paired points, got {n}")
    x, y = pair.x, pair.y
    mean_x = math.fsum(x) / n
    mean_y = math.fsum(y) / n
    sxx = math.fsum((xi - mean_x) ** 2 for xi in x)
    syy = math.fsum((yi - mean_y) ** 2 for yi in y)
    if sxx == 0.0:
        raise ZeroVariance("x")
    if syy == 0.0:
        raise ZeroVariance("y")
    sxy = math.fsum((xi - mean_x) * (yi - mean_y) for xi, yi in zip(x, y))
    r = sxy / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def p_two_tailed(r: float, n: int) -> float:
    """Two-tailed p-value for an observed correlation r over n pairs.

    Degenerate limits are exact: r = 0 gives 1, |r| = 1 gives 0.
    """
    if n < MIN_POINTS:
        raise TooFewPoints(f"need at least {MIN_POINTS} paired points, got {n}")
    if not -1.0 <= r <= 1.0:
        raise ValueError(f"correlation out of range: {r!r}")
    if r == 0.0:
        return 1.0
    if abs(r) == 1.0:
        return 0.0
    df = n - 2
    # x = df/(df + t^2) collapses to (1-r)(1+r); the factored form avoids
    # cancellation near |r| = 1.
    x = (1.0 - r) * (1.0 + r)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b) for a, b > 0.

    Continued-fraction evaluation (modified Lentz), applied on whichever
    side of the symmetry point keeps the fraction convergent, with
    I_x(a, b) = 1 - I_{1-x}(b, a) covering the other side.
    """
    if a <= 0.0 or b <= 0.0:
        raise ValueError("shape parameters must be positive")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x out of [0, 1]: {x!r}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    log_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _lentz_beta_cf(a, b, x) / a
    return 1.0 - front * _lentz_beta_cf(b, a, 1.0 - x) / b


def _lentz_beta_cf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta via modified Lentz."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_FPMIN:
        d = _CF_FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        # even step
        coeff = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + coeff * d
        if abs(d) < _CF_FPMIN:
            d = _CF_FPMIN
        c = 1.0 + coeff / c
        if abs(c) < _CF_FPMIN:
            c = _CF_FPMIN
        d = 1.0 / d
        h *= d * c
        # odd step
        coeff = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + coeff * d
        if abs(d) < _CF_FPMIN:
            d = _CF_FPMIN
        c = 1.0 + coeff / c
        if abs(c) < _CF_FPMIN:
            c = _CF_FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise NoConvergence(
        f"incomplete beta continued fraction did not converge for a={a}, b={b}, x={x}"
    )


@dataclass(frozen=True)
class CorrelationResult:
    """One cell of the correlation matrix.

    Cells whose preconditions failed carry the error code instead of
    numbers: r and p are None and ``error`` names what went wrong.
    """

    x_label: str
    y_label: str
    n: int
    r: Optional[float]
    p: Optional[float]
    error: Optional[str] = None

    def significant(self, alpha: float = 0.05) -> bool:
        return self.p is not None and self.p < alpha


def correlate(pair: AlignedPair, x_label: str, y_label: str) -> CorrelationResult:
    """Correlate one aligned pair, embedding precondition failures."""
    try:
        r = pearson_r(pair)
        p = p_two_tailed(r, pair.n)
    except (TooFewPoints, ZeroVariance) as exc:
        return CorrelationResult(
            x_label=x_label, y_label=y_label, n=pair.n, r=None, p=None, error=exc.code
        )
    return CorrelationResult(x_label=x_label, y_label=y_label, n=pair.n, r=r, p=p)


def correlation_matrix(
    hashtag_series: list[DailySeries],
    mobility: MobilitySeries,
    window: DateWindow,
) -> list[CorrelationResult]:
    """Correlate every hashtag series against every mobility category.

    Output is ordered by (series label, category declaration order) and is
    deterministic regardless of input order.
    """
    if not hashtag_series:
        raise ValueError("hashtag_series must be non-empty")
    results = []
    for s in sorted(hashtag_series, key=lambda s: s.label):
        for cat in MobilityCategory:
            pair = align(s, category_series(mobility, cat, window), window)
            results.append(correlate(pair, x_label=s.label, y_label=cat.value))
    return results
