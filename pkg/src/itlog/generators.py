"""Seeded random inputs for property runs (tests and ``itlog verify commute``)."""
from __future__ import annotations

import random
from fractions import Fraction

from .algebra import ZERO, Element
from .rforms import RForm, RMonomial, RPoly, make_poly_exps
from .series import YSeries

SMALL_EXPONENTS = [Fraction(k, d) for k in range(-3, 4) for d in (1, 2) if k]


def random_scalar(rng: random.Random, bound: int = 9, denominators=(1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.choice(denominators))


def random_element(
    rng: random.Random,
    levels: tuple[int, int] = (-3, 3),
    max_terms: int = 3,
    max_factors: int = 2,
    exponents=SMALL_EXPONENTS,
) -> Element:
    acc = ZERO
    for _ in range(rng.randint(0, max_terms)):
        support = rng.sample(range(levels[0], levels[1] + 1), rng.randint(0, max_factors))
        exps = {i: rng.choice(exponents) for i in support}
        acc = acc + Element.monomial(exps, random_scalar(rng))
    return acc


def random_rpoly(rng: random.Random, max_degree: int = 3, bound: int = 9) -> RPoly:
    return RPoly(rng.randint(-bound, bound) for _ in range(rng.randint(0, max_degree) + 1))


def random_rform(
    rng: random.Random,
    max_terms: int = 4,
    levels: tuple[int, int] = (-3, 3),
    max_degree: int = 3,
    bound: int = 9,
) -> RForm:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        support = rng.sample(range(levels[0], levels[1] + 1), rng.randint(0, 3))
        exps = make_poly_exps({i: random_rpoly(rng, max_degree, bound) for i in support})
        terms.append(RMonomial(random_rpoly(rng, max_degree, bound), exps))
    # Reuse an exponent tuple now and then so reduction has something to merge.
    if len(terms) > 1 and rng.random() < 0.5:
        terms[-1] = RMonomial(terms[-1].q, terms[0].exps)
    return RForm(terms)


def random_nilpotent_series(rng: random.Random, order: int, **element_kw) -> YSeries:
    """Series with zero constant term, the admissible inputs of log and exp."""
    return YSeries([ZERO] + [random_element(rng, **element_kw) for _ in range(order)], order)


def rewrite_rform(f: RForm, rng: random.Random) -> RForm:
    """Another form of the same function: split, cancel and shuffle summands."""
    terms = []
    for t in f.terms:
        if rng.random() < 0.5:
            part = random_rpoly(rng)
            terms += [RMonomial(part, t.exps), RMonomial(t.q - part, t.exps)]
        else:
            terms.append(t)
    if rng.random() < 0.5:
        extra = random_rform(rng).terms[0]
        terms += [extra, RMonomial(-extra.q, extra.exps)]
    rng.shuffle(terms)
    return RForm(terms)
