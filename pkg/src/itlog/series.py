"""Truncated power series in ``y`` with algebra-valued coefficients.

The translation operator ``e^{y d/dx} = sum_k y^k (d/dx)^k / k!`` turns an
element ``f(x)`` into the formal expansion of ``f(x + y)``.  On top of it
this module checks the iterated-log recursion::

    l_{n+1}(x+y) = l_{n+1}(x) + log(1 + (l_n(x+y) - l_n(x)) / l_n(x))

and its exponential form, exactly, one power of ``y`` at a time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .algebra import (
    ONE,
    ZERO,
    Element,
    ScalarLike,
    derive,
    format_factor,
    format_terms,
    invert_unit,
)
from .errors import NotWellDefined, OrderMismatch


class YSeries:
    """``c_0 + c_1 y + ... + c_N y^N`` with every power above ``N`` discarded."""

    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[Element, ...]

    def __init__(self, coeffs: Sequence[Element], order: Optional[int] = None):
        coeffs = tuple(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        coeffs = coeffs + (ZERO,) * (order + 1 - len(coeffs))
        for c in coeffs:
            if not isinstance(c, Element):
                raise TypeError(f"series coefficients must be Elements, got {type(c).__name__}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("YSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "YSeries":
        return cls((), order)

    @classmethod
    def constant(cls, e: Element, order: int) -> "YSeries":
        return cls((e,), order)

    def __getitem__(self, k: int) -> Element:
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, YSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"YSeries({format_series(self)!r}, order={self.order})"

    def __str__(self) -> str:
        return format_series(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "YSeries") -> None:
        if not isinstance(other, YSeries):
            raise TypeError(f"expected YSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "YSeries") -> "YSeries":
        self._check(other)
        return YSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "YSeries") -> "YSeries":
        self._check(other)
        return YSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "YSeries":
        return YSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other) -> "YSeries":
        if isinstance(other, (Element, int, Fraction)):
            return self.scale_by_element(other)
        self._check(other)
        N = self.order
        out = [ZERO] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(N + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return YSeries(out, N)

    def scale_by_element(self, e: Element | ScalarLike) -> "YSeries":
        return YSeries([c * e for c in self.coeffs], self.order)


def series_arith(a: YSeries, b, kind: str) -> YSeries:
    """Dispatch form of series arithmetic: add, sub, mul, scale_by_element."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "scale_by_element":
        return a.scale_by_element(b)
    raise ValueError(f"unknown operation {kind!r}")


def translate(e: Element, order: int) -> YSeries:
    """Apply ``e^{y d/dx}`` to ``e``, keeping powers of ``y`` up to ``order``."""
    coeffs = []
    d = e
    fact = 1
    for k in range(order + 1):
        if k:
            d = derive(d)
            fact *= k
        coeffs.append(d.scale(Fraction(1, fact)) if fact != 1 else d)
    return YSeries(coeffs, order)


def _require_no_constant(X: YSeries, what: str) -> None:
    if X.coeffs[0]:
        raise NotWellDefined(f"{what} needs a zero constant term, got {X.coeffs[0]}")


def series_log1p(X: YSeries) -> YSeries:
    """``log(1 + X) = sum_{i>=1} (-1)^(i-1) X^i / i``, truncated."""
    _require_no_constant(X, "log(1 + X)")
    N = X.order
    total = YSeries.zero(N)
    power = X
    for i in range(1, N + 1):
        total = total + power.scale_by_element(Fraction((-1) ** (i - 1), i))
        power = power * X
    return total


def series_exp(X: YSeries) -> YSeries:
    """``e^X = sum_{i>=0} X^i / i!``, truncated."""
    _require_no_constant(X, "exp(X)")
    N = X.order
    total = YSeries.constant(ONE, N)
    power = YSeries.constant(ONE, N)
    fact = 1
    for i in range(1, N + 1):
        power = power * X
        fact *= i
        total = total + power.scale_by_element(Fraction(1, fact))
    return total


@dataclass(frozen=True)
class Report:
    """Outcome of one identity check.

    ``index`` is the first power of ``y`` (or the first order ``k``) at which
    the two sides disagree and ``difference`` is their nonzero difference there.
    """

    identity: str
    params: dict[str, Any]
    passed: bool
    index: Optional[int] = None
    difference: Optional[Element] = None
    detail: dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{'PASS' if self.passed else 'FAIL'} {self.identity} {args}"
        if not self.passed and self.index is not None:
            line += f" first mismatch at k={self.index}: {self.difference}"
        return line


def compare_series(identity: str, params: dict[str, Any], lhs: YSeries, rhs: YSeries) -> Report:
    diff = lhs - rhs
    for k, c in enumerate(diff.coeffs):
        if c:
            return Report(identity, params, False, k, c)
    return Report(identity, params, True)


def log_recursion_sides(n: int, order: int) -> tuple[YSeries, YSeries]:
    upper = Element.level(n + 1)
    base = Element.level(n)
    lhs = translate(upper, order)
    X = (translate(base, order) - YSeries.constant(base, order)) * invert_unit(base)
    rhs = YSeries.constant(upper, order) + series_log1p(X)
    return lhs, rhs


def exp_recursion_sides(n: int, order: int) -> tuple[YSeries, YSeries]:
    upper = Element.level(n + 1)
    base = Element.level(n)
    lhs = translate(base, order)
    rhs = series_exp(translate(upper, order) - YSeries.constant(upper, order)) * base
    return lhs, rhs


def verify_log_recursion(n: int, order: int) -> Report:
    lhs, rhs = log_recursion_sides(n, order)
    return compare_series("log-recursion", {"n": n, "N": order}, lhs, rhs)


def verify_exp_recursion(n: int, order: int) -> Report:
    lhs, rhs = exp_recursion_sides(n, order)
    return compare_series("exp-recursion", {"n": n, "N": order}, lhs, rhs)


def format_series(s: YSeries) -> str:
    def terms() -> Iterable:
        for k, c in enumerate(s.coeffs):
            y = [] if k == 0 else ["y"] if k == 1 else [f"y^{k}"]
            for exps, coeff in c.terms:
                yield coeff, y + [format_factor(level, r) for level, r in exps]

    return format_terms(terms())
