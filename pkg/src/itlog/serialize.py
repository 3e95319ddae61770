"""JSON-ready payloads for elements, series, forms and reports.

Exponent vectors are encoded as ``[level, numerator, denominator]`` triples
so no consumer has to deal with integer-valued object keys.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .algebra import Element
from .rforms import RForm, RMonomial, RPoly, make_poly_exps
from .series import Report, YSeries


def scalar_to_json(c: Fraction) -> dict[str, int]:
    return {"numerator": c.numerator, "denominator": c.denominator}


def scalar_from_json(d: dict[str, int]) -> Fraction:
    return Fraction(int(d["numerator"]), int(d["denominator"]))


def element_to_json(e: Element) -> list[dict[str, Any]]:
    return [
        {
            "coefficient": scalar_to_json(c),
            "exponents": [[level, r.numerator, r.denominator] for level, r in exps],
        }
        for exps, c in e.terms
    ]


def element_from_json(payload: list[dict[str, Any]]) -> Element:
    acc = Element()
    for term in payload:
        exps = [(int(level), Fraction(int(num), int(den))) for level, num, den in term["exponents"]]
        acc = acc + Element.monomial(exps, scalar_from_json(term["coefficient"]))
    return acc


def series_to_json(s: YSeries) -> dict[str, Any]:
    return {"order": s.order, "coefficients": [element_to_json(c) for c in s.coeffs]}


def series_from_json(payload: dict[str, Any]) -> YSeries:
    return YSeries([element_from_json(c) for c in payload["coefficients"]], int(payload["order"]))


def rpoly_to_json(p: RPoly) -> list[list[int]]:
    return [[c.numerator, c.denominator] for c in p.coeffs]


def rpoly_from_json(payload: list[list[int]]) -> RPoly:
    return RPoly(Fraction(int(n), int(d)) for n, d in payload)


def rform_to_json(f: RForm) -> dict[str, Any]:
    return {
        "reduced": f.reduced,
        "terms": [
            {"q": rpoly_to_json(t.q), "exponents": [[level, rpoly_to_json(p)] for level, p in t.exps]}
            for t in f.terms
        ],
    }


def rform_from_json(payload: dict[str, Any]) -> RForm:
    terms = [
        RMonomial(
            rpoly_from_json(t["q"]),
            make_poly_exps([(int(level), rpoly_from_json(p)) for level, p in t["exponents"]]),
        )
        for t in payload["terms"]
    ]
    return RForm(terms, reduced=bool(payload.get("reduced", False)))


def report_to_json(rep: Report) -> dict[str, Any]:
    out: dict[str, Any] = {
        "identity": rep.identity,
        "params": rep.params,
        "verdict": "pass" if rep.passed else "fail",
    }
    if not rep.passed:
        out["index"] = rep.index
        out["difference"] = None if rep.difference is None else element_to_json(rep.difference)
    if rep.detail:
        out["detail"] = rep.detail
    return out
