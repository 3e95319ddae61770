"""Floating-point evaluation of formal elements as genuine functions of x.

Level ``n > 0`` is the n-fold natural log, level ``n < 0`` the |n|-fold
exponential.  Used only as an independent sanity witness for the exact
symbolic machinery.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element
from .errors import NumericDomainError
from .series import Report, YSeries, translate


@dataclass(frozen=True)
class SamplePoint:
    n_min: int
    n_max: int
    x0: float
    y0: float = 1e-3
    tolerance: float = 1e-9

    def __post_init__(self):
        if self.n_min > self.n_max:
            raise ValueError("empty level window")
        for n in range(self.n_min, self.n_max + 1):
            eval_level(n, self.x0)


def sample_x0(n_min: int, n_max: int) -> float:
    """Default evaluation point for a window of levels.

    Iterated exponentials overflow quickly, so windows reaching level -2
    sit at ``x0 = 1`` and level -1 at ``x0 = 3``; otherwise ``x0 = 20``.
    """
    if n_min <= -2:
        return 1.0
    if n_min == -1:
        return 3.0
    return 20.0


def sample_point(n_min: int, n_max: int, y0: float = 1e-3, tolerance: float = 1e-9) -> SamplePoint:
    return SamplePoint(n_min, n_max, sample_x0(n_min, n_max), y0, tolerance)


def eval_level(n: int, x0: float) -> float:
    v = float(x0)
    if n > 0:
        for _ in range(n):
            if v <= 0:
                raise NumericDomainError(f"l_{n} undefined at x={x0}: log of non-positive value {v}")
            v = math.log(v)
    elif n < 0:
        for _ in range(-n):
            try:
                v = math.exp(v)
            except OverflowError:
                raise NumericDomainError(f"l_{n} overflows at x={x0}") from None
    if not math.isfinite(v):
        raise NumericDomainError(f"l_{n} is not finite at x={x0}")
    return v


def _power(base: float, r: Fraction) -> float:
    if r.denominator == 1:
        if base == 0 and r < 0:
            raise NumericDomainError("zero raised to a negative power")
        return base ** int(r)
    if base <= 0:
        raise NumericDomainError(f"non-integer power {r} of non-positive value {base}")
    return base ** (r.numerator / r.denominator)


def eval_element(e: Element, x0: float) -> float:
    cache: dict[int, float] = {}
    total = 0.0
    for exps, c in e.terms:
        term = c.numerator / c.denominator
        for level, r in exps:
            if level not in cache:
                cache[level] = eval_level(level, x0)
            term *= _power(cache[level], r)
        total += term
    if not math.isfinite(total):
        raise NumericDomainError(f"{e} is not finite at x={x0}")
    return total


def eval_series(s: YSeries, x0: float, y0: float) -> float:
    return sum(eval_element(c, x0) * y0**k for k, c in enumerate(s.coeffs) if c)


def relative_error(got: float, want: float) -> float:
    return abs(got - want) / max(1.0, abs(want))


def crosscheck_translate(n: int, order: int, p: SamplePoint) -> Report:
    approx = eval_series(translate(Element.level(n), order), p.x0, p.y0)
    exact = eval_level(n, p.x0 + p.y0)
    err = relative_error(approx, exact)
    return Report(
        "crosscheck-translate",
        {"n": n, "N": order, "x0": p.x0, "y0": p.y0, "tol": p.tolerance},
        err <= p.tolerance,
        detail={"series": approx, "direct": exact, "relative_error": err},
    )
