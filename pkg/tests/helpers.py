import sympy
from hypothesis import strategies as st

from itlog.algebra import Element
from itlog.rforms import RForm, RMonomial, RPoly, make_poly_exps

X = sympy.Symbol("x", positive=True)


def sympy_level(n: int):
    """l_n as a genuine function of x: iterated log (n > 0) or exp (n < 0)."""
    v = X
    for _ in range(abs(n)):
        v = sympy.log(v) if n > 0 else sympy.exp(v)
    return v


def to_sympy(e: Element):
    total = sympy.Integer(0)
    for exps, c in e.terms:
        term = sympy.Rational(c.numerator, c.denominator)
        for level, r in exps:
            term *= sympy_level(level) ** sympy.Rational(r.numerator, r.denominator)
        total += term
    return total


def high_precision_value(expr, x0, digits: int = 40):
    return sympy.N(expr.subs(X, x0), digits)


exponents = st.fractions(min_value=-3, max_value=3, max_denominator=3)
coefficients = st.fractions(min_value=-9, max_value=9, max_denominator=4).filter(bool)
levels = st.integers(min_value=-3, max_value=3)


@st.composite
def elements(draw, max_terms: int = 3, level_strategy=levels):
    acc = Element()
    for _ in range(draw(st.integers(0, max_terms))):
        exps = draw(st.dictionaries(level_strategy, exponents, max_size=3))
        acc = acc + Element.monomial(exps, draw(coefficients))
    return acc


rpolys = st.lists(st.integers(-9, 9), max_size=4).map(RPoly)


@st.composite
def rforms(draw):
    terms = []
    for _ in range(draw(st.integers(1, 4))):
        exps = draw(st.dictionaries(levels, rpolys, max_size=3))
        terms.append(RMonomial(draw(rpolys), make_poly_exps(exps)))
    return RForm(terms)

