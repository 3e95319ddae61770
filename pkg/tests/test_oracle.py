import math
import random
from fractions import Fraction as F

import pytest

from itlog.algebra import ONE, Element, derive
from itlog.errors import NumericDomainError
from itlog.generators import random_element
from itlog.oracle import (
    SamplePoint,
    crosscheck_translate,
    eval_element,
    eval_level,
    eval_series,
    relative_error,
    sample_point,
    sample_x0,
)
from itlog.series import exp_recursion_sides, log_recursion_sides

l = Element.level

# Level windows for random elements, each with an x0 where every level is tame.
WINDOWS = [((0, 2), 20.0), ((-1, 1), 3.0), ((-2, 0), 1.0)]


def test_eval_level():
    assert eval_level(0, 20) == 20.0
    assert eval_level(1, 20) == pytest.approx(2.995732273553991, rel=1e-15)
    assert eval_level(-2, 1) == pytest.approx(15.154262241479262, rel=1e-15)
    with pytest.raises(NumericDomainError):
        eval_level(3, 2)
    with pytest.raises(NumericDomainError):
        eval_level(-4, 5)


def test_eval_element():
    assert eval_element(l(0, -1), 20) == 0.05
    assert eval_element(l(0) + l(1), 20) == pytest.approx(22.995732273553991, rel=1e-15)
    assert eval_element(ONE, 3.0) == 1.0
    assert eval_element(l(0, F(1, 2)), 16) == 4.0
    with pytest.raises(NumericDomainError):
        eval_element(l(2, F(1, 2)), 2.0)  # ln ln 2 < 0


def test_sample_point_rejects_bad_window():
    with pytest.raises(NumericDomainError):
        SamplePoint(0, 3, 2.0)
    assert sample_point(-2, 0).x0 == 1.0


@pytest.mark.parametrize(
    "n, order, x0",
    [(1, 6, 20.0), (0, 1, 20.0), (0, 1, 3.5), (-1, 6, 2.0), (-1, 6, 3.0), (-2, 6, 1.0), (2, 6, 20.0)],
)
def test_crosscheck_passes(n, order, x0):
    rep = crosscheck_translate(n, order, SamplePoint(min(n, 0), max(n, 0), x0, 1e-3, 1e-12))
    assert rep.passed, rep.detail


def test_crosscheck_level_zero_is_exact():
    rep = crosscheck_translate(0, 1, SamplePoint(0, 0, 7.25, 0.5, 0.0))
    assert rep.passed and rep.detail["relative_error"] == 0.0


def test_crosscheck_fails_on_coarse_truncation():
    rep = crosscheck_translate(1, 1, SamplePoint(0, 1, 2.0, 0.5, 1e-9))
    assert not rep.passed


@pytest.mark.parametrize("n", range(-2, 3))
def test_recursion_sides_numerically(n):
    x0 = sample_x0(min(n, 0), max(n + 1, 0))
    y0 = 1e-3
    lhs, rhs = log_recursion_sides(n, 6)
    assert relative_error(eval_series(lhs, x0, y0), eval_series(rhs, x0, y0)) <= 1e-9
    assert relative_error(eval_series(rhs, x0, y0), eval_level(n + 1, x0 + y0)) <= 1e-9
    lhs, rhs = exp_recursion_sides(n, 6)
    assert relative_error(eval_series(lhs, x0, y0), eval_series(rhs, x0, y0)) <= 1e-9
    assert relative_error(eval_series(rhs, x0, y0), eval_level(n, x0 + y0)) <= 1e-9


@pytest.mark.parametrize("seed", range(5))
def test_finite_difference_derivative(seed):
    rng = random.Random(seed)
    h = 1e-5
    for _ in range(10):
        (lo, hi), x0 = rng.choice(WINDOWS)
        e = random_element(rng, levels=(lo, hi))
        fd = (eval_element(e, x0 + h) - eval_element(e, x0 - h)) / (2 * h)
        assert relative_error(fd, eval_element(derive(e), x0)) <= 1e-6


@pytest.mark.parametrize("n", range(-2, 3))
def test_truncation_error_does_not_grow(n):
    x0 = sample_x0(min(n, 0), max(n, 0))
    y0 = 1e-2
    errs = []
    for N in (2, 4, 6):
        rep = crosscheck_translate(n, N, SamplePoint(min(n, 0), max(n, 0), x0, y0, 1.0))
        errs.append(rep.detail["relative_error"])
    assert errs[1] <= errs[0] + 1e-14 and errs[2] <= errs[1] + 1e-14
    assert math.isfinite(errs[-1])
