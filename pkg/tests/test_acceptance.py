"""Exit criteria for the package, one test per criterion.

Symbolic checks are exact (``==`` on canonical forms); only the numeric
oracle uses tolerances.  Each test is named ``test_acN_...`` and the
conftest prints a PASS/FAIL line for every criterion after the run.
"""
import random
import time
from math import comb

from click.testing import CliRunner

from itlog.algebra import ZERO, Element, derive, derive_power
from itlog.cli import main
from itlog.generators import (
    random_element,
    random_nilpotent_series,
    random_rform,
    random_scalar,
    rewrite_rform,
)
from itlog.oracle import (
    SamplePoint,
    crosscheck_translate,
    eval_element,
    relative_error,
    sample_x0,
)
from itlog.rforms import (
    rform_eval,
    rform_reduce,
    verify_itloglim,
    verify_lim_derive_commute,
    verify_translated_limit,
)
from itlog.series import YSeries, series_exp, series_log1p, translate, verify_exp_recursion, verify_log_recursion
from itlog.syntax import parse_element

l = Element.level
LEVELS = range(-5, 6)
ORDERS = range(0, 9)
TIME_BUDGET = 60.0
SEED = 20261016


def _sweep(check):
    start = time.perf_counter()
    failures = [str(rep) for n in LEVELS for N in ORDERS if not (rep := check(n, N)).passed]
    return failures, time.perf_counter() - start


def test_ac1_log_recursion_grid():
    failures, elapsed = _sweep(verify_log_recursion)
    assert failures == []
    assert elapsed < TIME_BUDGET


def test_ac2_exp_recursion_grid():
    failures, elapsed = _sweep(verify_exp_recursion)
    assert failures == []
    assert elapsed < TIME_BUDGET


def test_ac3_iterated_log_limit():
    assert all(verify_itloglim(n, m).passed for n in range(-3, 4) for m in range(1, 5))
    assert all(verify_translated_limit(n, N).passed for n in range(-3, 4) for N in range(1, 5))


def test_ac4_limit_commutes_with_derivation():
    rng = random.Random(SEED)
    reports = [verify_lim_derive_commute(random_rform(rng)) for _ in range(100)]
    assert all(rep.passed for rep in reports)


def test_ac5_translation_of_polynomials():
    for k in range(0, 7):
        for N in ORDERS:
            binomial = YSeries([l(0, k - j, coeff=comb(k, j)) if j <= k else ZERO for j in range(N + 1)])
            assert translate(l(0, k), N) == binomial


def test_ac6_derivation_axioms():
    rng = random.Random(SEED)
    for _ in range(200):
        a, b = random_element(rng), random_element(rng)
        alpha, beta = random_scalar(rng), random_scalar(rng)
        assert derive(a * b) == derive(a) * b + a * derive(b)
        assert derive(a.scale(alpha) + b.scale(beta)) == derive(a).scale(alpha) + derive(b).scale(beta)
    assert derive_power(0, 5) == l(0, 4, coeff=5)
    assert derive_power(1, 1) == l(0, -1)
    assert derive_power(-2, 1) == l(-1) * l(-2)
    assert derive_power(3, 0) == ZERO


def test_ac7_exp_log_inversion():
    rng = random.Random(SEED)
    N = 8
    one = YSeries.constant(Element.constant(1), N)
    for _ in range(50):
        X = random_nilpotent_series(rng, N, max_terms=2)
        assert series_exp(series_log1p(X)) == one + X


def test_ac8_reduced_form_uniqueness():
    rng = random.Random(SEED)
    for _ in range(100):
        f = random_rform(rng)
        g = rform_reduce(f)
        assert rform_reduce(g) == g
        assert all(rform_eval(g, r) == rform_eval(f, r) for r in range(1, 11))
        h = rewrite_rform(f, rng)
        D = max(f.max_degree(), h.max_degree()) + 1
        assert all(rform_eval(f, r) == rform_eval(h, r) for r in range(1, D + 2))
        assert rform_reduce(h) == g


def test_ac9_numeric_oracle():
    for n in range(-2, 3):
        lo, hi = min(n, 0), max(n, 0)
        point = SamplePoint(lo, hi, sample_x0(lo, hi), 1e-3, 1e-9)
        rep = crosscheck_translate(n, 6, point)
        assert rep.passed, rep.detail
    rng = random.Random(SEED)
    h = 1e-5
    windows = [((0, 2), 20.0), ((-1, 1), 3.0), ((-2, 0), 1.0)]
    for _ in range(50):
        (lo, hi), x0 = rng.choice(windows)
        e = random_element(rng, levels=(lo, hi))
        fd = (eval_element(e, x0 + h) - eval_element(e, x0 - h)) / (2 * h)
        assert relative_error(fd, eval_element(derive(e), x0)) <= 1e-6


def test_ac10_cli_and_parser():
    res = CliRunner().invoke(main, ["verify", "recursion", "--levels", "-5..5", "--order", "8"])
    assert res.exit_code == 0
    assert res.output.count("PASS") == 11
    rng = random.Random(SEED)
    for _ in range(200):
        e = random_element(rng, max_terms=4)
        assert parse_element(str(e)) == e
