"""Command-line front end.

Every command prints either human-readable text or one JSON document
(``--format json``) on stdout; diagnostics go to stderr.  Exit status is 0
when every verdict passes, 1 when a verdict fails and 2 on usage, parse or
domain errors.
"""
from __future__ import annotations

import json
import random
import re
import sys
from typing import Any, Callable, Optional

import click

from .algebra import Element, derive_n
from .errors import ItlogError
from .generators import random_rform
from .oracle import SamplePoint, crosscheck_translate, sample_x0
from .rforms import rform_limit, rform_reduce, verify_itloglim, verify_lim_derive_commute, verify_translated_limit
from .serialize import element_to_json, report_to_json, rform_to_json, series_to_json
from .series import Report, translate, verify_exp_recursion, verify_log_recursion
from .syntax import parse_element, parse_rform

_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")


def parse_range(text: str) -> range:
    m = _RANGE.match(text)
    if not m:
        raise click.BadParameter(f"expected a..b, got {text!r}")
    a = int(m.group(1))
    b = int(m.group(2)) if m.group(2) is not None else a
    if b < a:
        raise click.BadParameter(f"empty range {text!r}")
    return range(a, b + 1)


def _format_option(f: Callable) -> Callable:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "json"]),
        default=None,
        help="Output format (default: text).",
    )(f)


def emit(
    command: str,
    params: dict[str, Any],
    fmt: Optional[str],
    text: str,
    result: Any = None,
    reports: Optional[list[Report]] = None,
) -> None:
    ctx = click.get_current_context()
    fmt = fmt or (ctx.obj or {}).get("format") or "text"
    reports = reports or []
    ok = all(r.passed for r in reports)
    if fmt == "json":
        doc = {
            "command": command,
            "parameters": params,
            "result": result,
            "verdicts": [report_to_json(r) for r in reports],
            "ok": ok,
        }
        click.echo(json.dumps(doc, indent=2))
    else:
        if text:
            click.echo(text)
        for r in reports:
            click.echo(str(r))
    if not ok:
        ctx.exit(1)


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except ItlogError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(2)


@click.group(cls=_Group)
@_format_option
@click.pass_context
def main(ctx: click.Context, fmt: Optional[str]) -> None:
    """Exact calculus of formal iterated logarithms and exponentials."""
    ctx.ensure_object(dict)
    ctx.obj["format"] = fmt


@main.command()
@click.option("--level", "n", type=int, required=True, help="Level n of l_n.")
@click.option("--order", "order", type=click.IntRange(min=0), required=True)
@_format_option
def expand(n: int, order: int, fmt: Optional[str]) -> None:
    """Print the translation series of l_n(x + y) up to y^order."""
    s = translate(Element.level(n), order)
    emit("expand", {"level": n, "order": order}, fmt, str(s), series_to_json(s))


@main.command("derive")
@click.option("--expr", "expr", required=True, help="Element, e.g. '3/2*l(1)^2*l(0)^-1'.")
@click.option("--times", "times", type=click.IntRange(min=0), default=1, show_default=True)
@_format_option
def derive_cmd(expr: str, times: int, fmt: Optional[str]) -> None:
    """Apply d/dx to an element one or more times."""
    e = derive_n(parse_element(expr), times)
    emit("derive", {"expr": expr, "times": times}, fmt, str(e), element_to_json(e))


@main.command()
@click.option("--rform", "rform", required=True, help="Form in r, e.g. 'r*l(0)^(r-1)'.")
@_format_option
def reduce(rform: str, fmt: Optional[str]) -> None:
    """Print the reduced form of an r-form."""
    f = rform_reduce(parse_rform(rform))
    emit("reduce", {"rform": rform}, fmt, str(f), rform_to_json(f))


@main.command()
@click.option("--rform", "rform", required=True)
@_format_option
def limit(rform: str, fmt: Optional[str]) -> None:
    """Print the r -> 0 limit of an r-form."""
    e = rform_limit(parse_rform(rform))
    emit("limit", {"rform": rform}, fmt, str(e), element_to_json(e))


@main.command()
@click.option("--level", "n", type=int, required=True)
@click.option("--order", "order", type=click.IntRange(min=0), required=True)
@click.option("--x0", "x0", type=float, default=None, help="Evaluation point (default depends on level).")
@click.option("--y0", "y0", type=float, default=1e-3, show_default=True)
@click.option("--tol", "tol", type=float, default=1e-9, show_default=True)
@_format_option
def crosscheck(n: int, order: int, x0: Optional[float], y0: float, tol: float, fmt: Optional[str]) -> None:
    """Compare the truncated series for l_n(x+y) with direct float evaluation."""
    lo, hi = min(n, 0), max(n, 0)
    if x0 is None:
        x0 = sample_x0(lo, hi)
    rep = crosscheck_translate(n, order, SamplePoint(lo, hi, x0, y0, tol))
    d = rep.detail
    text = f"series={d['series']!r} direct={d['direct']!r} relative_error={d['relative_error']:.3e}"
    emit("crosscheck", dict(rep.params), fmt, text, dict(d), [rep])


@main.group()
def verify() -> None:
    """Exact verification sweeps."""


@verify.command()
@click.option("--levels", "levels", required=True, help="Inclusive range a..b of n.")
@click.option("--order", "order", type=click.IntRange(min=0), required=True)
@click.option("--exp-form", is_flag=True, help="Check the exponential form instead of the log form.")
@_format_option
def recursion(levels: str, order: int, exp_form: bool, fmt: Optional[str]) -> None:
    """Check the iterated-log recursion for each n in LEVELS."""
    check = verify_exp_recursion if exp_form else verify_log_recursion
    reports = [check(n, order) for n in parse_range(levels)]
    params = {"levels": levels, "order": order, "exp_form": exp_form}
    emit("verify recursion", params, fmt, "", None, reports)


@verify.command()
@click.option("--levels", "levels", required=True, help="Inclusive range a..b of n.")
@click.option("--max-m", "max_m", type=click.IntRange(min=1), required=True)
@_format_option
def limits(levels: str, max_m: int, fmt: Optional[str]) -> None:
    """Check lim_{r->0} (d/dx)^m (l_n^r / r) = (d/dx)^m l_{n+1} for m <= MAX_M."""
    reports = []
    for n in parse_range(levels):
        reports += [verify_itloglim(n, m) for m in range(1, max_m + 1)]
        reports.append(verify_translated_limit(n, max_m))
    emit("verify limits", {"levels": levels, "max_m": max_m}, fmt, "", None, reports)


@verify.command()
@click.option("--count", "count", type=click.IntRange(min=0), default=100, show_default=True)
@click.option("--seed", "seed", type=int, default=0, show_default=True)
@_format_option
def commute(count: int, seed: int, fmt: Optional[str]) -> None:
    """Check that r -> 0 commutes with d/dx on COUNT random r-forms."""
    rng = random.Random(seed)
    reports = [verify_lim_derive_commute(random_rform(rng)) for _ in range(count)]
    passed = sum(r.passed for r in reports)
    summary = f"{passed}/{count} random forms pass (seed {seed})"
    emit("verify commute", {"count": count, "seed": seed}, fmt, summary, None, reports)


if __name__ == "__main__":
    sys.exit(main())
