"""Exact arithmetic in the algebra of formal iterated logarithms.

An :class:`Element` is a finite rational linear combination of monomials
``prod_i l_i(x)^{r_i}`` with rational exponents ``r_i``. Level ``0`` is
``x`` itself, positive levels are iterated logarithms and negative levels
are iterated exponentials. Multiplying two monomials adds their exponent
vectors.

The derivation :func:`derive` is the unique one satisfying::

    d/dx l_0^r  = r l_0^(r-1)
    d/dx l_n^r  = r l_n^(r-1) * prod_{i=0}^{n-1} l_i^-1      (n > 0)
    d/dx l_-n^r = r l_-n^(r-1) * prod_{i=-1}^{-n} l_i        (n > 0)

All coefficients and exponents are :class:`fractions.Fraction`, so every
operation is exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .errors import NotAUnit

Scalar = Fraction
ScalarLike = Union[int, Fraction]

# Sorted tuple of (level, exponent) pairs; zero exponents are never stored.
ExpVec = tuple[tuple[int, Fraction], ...]

UNIT_EXPS: ExpVec = ()


def as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def make_exps(exps: Mapping[int, ScalarLike] | Iterable[tuple[int, ScalarLike]]) -> ExpVec:
    items = exps.items() if isinstance(exps, Mapping) else exps
    acc: dict[int, Fraction] = {}
    for level, r in items:
        acc[int(level)] = acc.get(int(level), Fraction(0)) + as_scalar(r)
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def add_exps(a: ExpVec, b: ExpVec) -> ExpVec:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for level, r in b:
        s = acc.get(level, 0) + r
        if s:
            acc[level] = s
        else:
            del acc[level]
    return tuple(sorted(acc.items()))


def neg_exps(a: ExpVec) -> ExpVec:
    return tuple((level, -r) for level, r in a)


class Element:
    """Canonical element of the algebra: sorted, merged, zero-free terms.

    Instances are immutable and hashable; ``==`` is algebraic equality.
    Integers and Fractions are promoted to constants in arithmetic.
    """

    __slots__ = ("terms",)

    terms: tuple[tuple[ExpVec, Fraction], ...]

    def __init__(self, terms: Mapping[ExpVec, ScalarLike] | None = None):
        if terms is None:
            object.__setattr__(self, "terms", ())
            return
        canon = sorted((e, as_scalar(c)) for e, c in terms.items() if c)
        object.__setattr__(self, "terms", tuple(canon))

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @classmethod
    def _from_acc(cls, acc: dict[ExpVec, Fraction]) -> "Element":
        new = cls.__new__(cls)
        object.__setattr__(new, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))
        return new

    @classmethod
    def constant(cls, c: ScalarLike) -> "Element":
        return cls({UNIT_EXPS: c})

    @classmethod
    def monomial(cls, exps: Mapping[int, ScalarLike] | ExpVec = (), coeff: ScalarLike = 1) -> "Element":
        return cls({make_exps(exps): coeff})

    @classmethod
    def level(cls, i: int, r: ScalarLike = 1, coeff: ScalarLike = 1) -> "Element":
        """``coeff * l_i(x)^r``."""
        return cls({make_exps({i: r}): coeff})

    # -- inspection --------------------------------------------------------

    def __iter__(self) -> Iterator[tuple[ExpVec, Fraction]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def levels(self) -> set[int]:
        return {level for exps, _ in self.terms for level, _ in exps}

    def coefficient(self, exps: Mapping[int, ScalarLike] | ExpVec = ()) -> Fraction:
        key = make_exps(exps)
        for e, c in self.terms:
            if e == key:
                return c
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Element":
        if isinstance(other, Element):
            return other
        if isinstance(other, (int, Fraction)):
            return Element.constant(other)
        return NotImplemented

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return Element._from_acc(acc)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._from_acc({e: -c for e, c in self.terms})

    def __sub__(self, other) -> "Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Element":
        return (-self) + other

    def scale(self, alpha: ScalarLike) -> "Element":
        alpha = as_scalar(alpha)
        if not alpha:
            return ZERO
        return Element._from_acc({e: alpha * c for e, c in self.terms})

    def __mul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        acc: dict[ExpVec, Fraction] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                e = add_exps(ea, eb)
                acc[e] = acc.get(e, 0) + ca * cb
        return Element._from_acc(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Element":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers of general elements")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


ZERO = Element()
ONE = Element.constant(1)


def element_arith(a: Element, b: Element | None, kind: str, alpha: ScalarLike | None = None) -> Element:
    """Dispatch form of the ring operations: add, sub, mul, scale, negate."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "scale":
        return a.scale(alpha)
    if kind == "negate":
        return -a
    raise ValueError(f"unknown operation {kind!r}")


def invert_unit(m: Element) -> Element:
    if not m.is_monomial():
        raise NotAUnit(f"{m} is not a single monomial")
    (exps, c), = m.terms
    return Element({neg_exps(exps): 1 / c})


# -- the derivation --------------------------------------------------------


@lru_cache(maxsize=None)
def level_derivative_exps(i: int) -> ExpVec:
    """Exponent vector of d/dx l_i(x); its coefficient is always 1."""
    if i > 0:
        return tuple((k, Fraction(-1)) for k in range(0, i))
    if i < 0:
        return tuple((k, Fraction(1)) for k in range(i, 0))
    return UNIT_EXPS


def derive_power(i: int, r: ScalarLike) -> Element:
    r = as_scalar(r)
    if not r:
        return ZERO
    exps = add_exps(make_exps({i: r - 1}), level_derivative_exps(i))
    return Element({exps: r})


@lru_cache(maxsize=1 << 16)
def _derive_basis(exps: ExpVec) -> tuple[tuple[ExpVec, Fraction], ...]:
    # Sum over supported levels j of (d/dx l_j^{r_j}) * prod_{i != j} l_i^{r_i}.
    acc: dict[ExpVec, Fraction] = {}
    for j, rj in exps:
        shift = add_exps(((j, Fraction(-1)),), level_derivative_exps(j))
        e = add_exps(exps, shift)
        acc[e] = acc.get(e, 0) + rj
    return tuple((e, c) for e, c in acc.items() if c)


def derive(e: Element) -> Element:
    acc: dict[ExpVec, Fraction] = {}
    for exps, c in e.terms:
        for de, dc in _derive_basis(exps):
            acc[de] = acc.get(de, 0) + c * dc
    return Element._from_acc(acc)


def derive_n(e: Element, m: int) -> Element:
    if m < 0:
        raise ValueError("m must be non-negative")
    for _ in range(m):
        if not e:
            break
        e = derive(e)
    return e


# -- text form -------------------------------------------------------------


def format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_factor(level: int, r: Fraction) -> str:
    return f"l({level})" if r == 1 else f"l({level})^{format_scalar(r)}"


def format_terms(terms: Iterable[tuple[Fraction, list[str]]]) -> str:
    """Join signed terms ``coeff * factor * ...`` into ``a + b - c`` text."""
    out: list[str] = []
    for c, factors in terms:
        mag = abs(c)
        if not factors:
            body = format_scalar(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = format_scalar(mag) + "*" + "*".join(factors)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out) if out else "0"


def format_element(e: Element) -> str:
    return format_terms((c, [format_factor(level, r) for level, r in exps]) for exps, c in e.terms)
