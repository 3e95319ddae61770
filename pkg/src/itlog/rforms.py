"""Formal polynomial forms in a positive-integer parameter ``r``.

A form is a finite sum ``sum_j q_j(r) * prod_i l_i(x)^{p_ij(r)}`` with
polynomial ``q_j`` and ``p_ij``; it defines a function from ``{1, 2, ...}``
into the algebra by substitution.  Grouping summands with identical exponent
polynomials gives the unique reduced form, and the limit ``r -> 0`` is
substitution of ``0`` into that reduced form.

The derivation lifts to forms symbolically: differentiating
``l_j^{p(r)}`` produces the multiplier ``p(r)`` and the exponent
``p(r) - 1``, which are still polynomials in ``r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .algebra import (
    ExpVec,
    Element,
    ScalarLike,
    as_scalar,
    derive,
    derive_n,
    format_scalar,
    format_terms,
    level_derivative_exps,
)
from .errors import NotAPolynomialForm, OutOfDomain
from .series import Report, translate


class RPoly:
    """Univariate polynomial in ``r`` with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RPoly is immutable")

    @classmethod
    def constant(cls, c: ScalarLike) -> "RPoly":
        return cls((c,))

    @classmethod
    def var(cls) -> "RPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, r: ScalarLike) -> Fraction:
        r = as_scalar(r)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    @staticmethod
    def _coerce(other) -> "RPoly":
        if isinstance(other, RPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "RPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RPoly":
        return RPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "RPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RPoly":
        return (-self) + other

    def __mul__(self, other) -> "RPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = RPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RPoly({format_rpoly(self)!r})"

    def __str__(self) -> str:
        return format_rpoly(self)


ZERO_POLY = RPoly()
ONE_POLY = RPoly.constant(1)

# Sorted tuple of (level, exponent polynomial); zero polynomials are never stored.
PolyExps = tuple[tuple[int, RPoly], ...]


def make_poly_exps(exps: Mapping[int, RPoly | ScalarLike] | Iterable[tuple[int, RPoly | ScalarLike]]) -> PolyExps:
    items = exps.items() if isinstance(exps, Mapping) else exps
    acc: dict[int, RPoly] = {}
    for level, p in items:
        if not isinstance(p, RPoly):
            p = RPoly.constant(p)
        acc[level] = acc.get(level, ZERO_POLY) + p
    return tuple(sorted((k, v) for k, v in acc.items() if not v.is_zero()))


def _add_poly_exps(a: PolyExps, b: PolyExps) -> PolyExps:
    return make_poly_exps(list(a) + list(b))


def _lift_exps(exps: ExpVec) -> PolyExps:
    return tuple((level, RPoly.constant(r)) for level, r in exps)


def _exps_key(exps: PolyExps) -> tuple:
    return tuple((level, p.coeffs) for level, p in exps)


@dataclass(frozen=True)
class RMonomial:
    """``q(r) * prod_i l_i(x)^{p_i(r)}``."""

    q: RPoly
    exps: PolyExps = ()

    @classmethod
    def make(cls, q: RPoly | ScalarLike = 1, exps=()) -> "RMonomial":
        if not isinstance(q, RPoly):
            q = RPoly.constant(q)
        return cls(q, make_poly_exps(exps))

    def key(self) -> tuple:
        return _exps_key(self.exps)

    def max_degree(self) -> int:
        return max([self.q.degree] + [p.degree for _, p in self.exps])


class RForm:
    """A finite sum of :class:`RMonomial` summands.

    Equality is structural; call :func:`rform_reduce` first to compare
    the functions two forms define.
    """

    __slots__ = ("terms", "reduced")

    terms: tuple[RMonomial, ...]
    reduced: bool

    def __init__(self, terms: Iterable[RMonomial] = (), reduced: bool = False):
        object.__setattr__(self, "terms", tuple(t for t in terms if not t.q.is_zero()))
        object.__setattr__(self, "reduced", reduced)

    def __setattr__(self, name, value):
        raise AttributeError("RForm is immutable")

    @classmethod
    def monomial(cls, q: RPoly | ScalarLike = 1, exps=()) -> "RForm":
        return cls([RMonomial.make(q, exps)])

    @classmethod
    def from_element(cls, e: Element) -> "RForm":
        return cls([RMonomial(RPoly.constant(c), _lift_exps(exps)) for exps, c in e.terms])

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RForm):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"RForm({format_rform(self)!r})"

    def __str__(self) -> str:
        return format_rform(self)

    def max_degree(self) -> int:
        return max((t.max_degree() for t in self.terms), default=0)

    def __add__(self, other: "RForm") -> "RForm":
        if not isinstance(other, RForm):
            return NotImplemented
        return RForm(self.terms + other.terms)

    def __neg__(self) -> "RForm":
        return RForm(RMonomial(-t.q, t.exps) for t in self.terms)

    def __sub__(self, other: "RForm") -> "RForm":
        if not isinstance(other, RForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "RForm") -> "RForm":
        if not isinstance(other, RForm):
            return NotImplemented
        return RForm(
            RMonomial(a.q * b.q, _add_poly_exps(a.exps, b.exps)) for a in self.terms for b in other.terms
        )


def _substitute(f: RForm, r: ScalarLike) -> Element:
    acc = Element()
    for t in f.terms:
        c = t.q(r)
        if c:
            acc = acc + Element.monomial([(level, p(r)) for level, p in t.exps], c)
    return acc


def rform_eval(f: RForm, r: int) -> Element:
    if not isinstance(r, int) or r < 1:
        raise OutOfDomain(f"forms are defined on positive integers, got r={r!r}")
    return _substitute(f, r)


def rform_reduce(f: RForm) -> RForm:
    if f.reduced:
        return f
    groups: dict[tuple, RMonomial] = {}
    for t in f.terms:
        k = t.key()
        if k in groups:
            groups[k] = RMonomial(groups[k].q + t.q, t.exps)
        else:
            groups[k] = t
    return RForm((groups[k] for k in sorted(groups)), reduced=True)


def rform_derive(f: RForm) -> RForm:
    out: list[RMonomial] = []
    for t in f.terms:
        for j, pj in t.exps:
            shift = ((j, -ONE_POLY),) + _lift_exps(level_derivative_exps(j))
            out.append(RMonomial(t.q * pj, _add_poly_exps(t.exps, shift)))
    return rform_reduce(RForm(out))


def rform_limit(f: RForm) -> Element:
    return _substitute(rform_reduce(f), 0)


def derive_power_over_r(n: int, m: int) -> RForm:
    """``(d/dx)^m (l_n^r / r)`` for ``m >= 1``.

    The first derivative is ``l_n^{r-1} * d/dx l_n``; the power rule's
    factor ``r`` cancels the division, leaving a genuine polynomial form.
    """
    if m < 1:
        raise NotAPolynomialForm("l_n^r / r is not a formal polynomial form; need m >= 1")
    seed_exps = [(n, RPoly((-1, 1)))] + list(_lift_exps(level_derivative_exps(n)))
    f = rform_reduce(RForm.monomial(1, seed_exps))
    for _ in range(m - 1):
        f = rform_derive(f)
    return f


def verify_lim_derive_commute(f: RForm) -> Report:
    lhs = rform_limit(rform_derive(f))
    rhs = derive(rform_limit(f))
    diff = lhs - rhs
    return Report("limit-derive-commute", {"f": str(f)}, not diff, None, diff or None)


def verify_itloglim(n: int, m: int) -> Report:
    lhs = rform_limit(derive_power_over_r(n, m))
    rhs = derive_n(Element.level(n + 1), m)
    diff = lhs - rhs
    return Report("itloglim", {"n": n, "m": m}, not diff, None, diff or None)


def verify_translated_limit(n: int, order: int) -> Report:
    target = translate(Element.level(n + 1), order)
    for k in range(1, order + 1):
        got = rform_limit(derive_power_over_r(n, k)).scale(Fraction(1, factorial(k)))
        diff = got - target[k]
        if diff:
            return Report("translated-limit", {"n": n, "N": order}, False, k, diff)
    return Report("translated-limit", {"n": n, "N": order}, True)


# -- text form -------------------------------------------------------------


def format_rpoly(p: RPoly) -> str:
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c:
            terms.append((c, [] if k == 0 else ["r"] if k == 1 else [f"r^{k}"]))
    return format_terms(terms)


def _format_poly_exponent(p: RPoly) -> str:
    if p.is_constant():
        return format_scalar(p.constant_value())
    if p == RPoly.var():
        return "r"
    return f"({format_rpoly(p)})"


def format_rform(f: RForm) -> str:
    terms = []
    for t in f.terms:
        factors = [
            f"l({level})" if p == ONE_POLY else f"l({level})^{_format_poly_exponent(p)}" for level, p in t.exps
        ]
        if t.q.is_constant():
            terms.append((t.q.constant_value(), factors))
            continue
        nonzero = [(k, c) for k, c in enumerate(t.q.coeffs) if c]
        if len(nonzero) == 1:
            k, c = nonzero[0]
            terms.append((c, ["r" if k == 1 else f"r^{k}"] + factors))
            continue
        sign = 1 if t.q.coeffs[-1] > 0 else -1
        terms.append((Fraction(sign), [f"({format_rpoly(t.q * sign)})"] + factors))
    return format_terms(terms)
