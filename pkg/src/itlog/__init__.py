"""Exact formal calculus of iterated logarithms and exponentials."""
from .algebra import ONE, ZERO, Element, derive, derive_n, derive_power, element_arith, invert_unit
from .errors import (
    ItlogError,
    NotAPolynomialForm,
    NotAUnit,
    NotWellDefined,
    NumericDomainError,
    OrderMismatch,
    OutOfDomain,
    ParseError,
)
from .rforms import (
    RForm,
    RMonomial,
    RPoly,
    derive_power_over_r,
    rform_derive,
    rform_eval,
    rform_limit,
    rform_reduce,
    verify_itloglim,
    verify_lim_derive_commute,
    verify_translated_limit,
)
from .series import (
    Report,
    YSeries,
    series_arith,
    series_exp,
    series_log1p,
    translate,
    verify_exp_recursion,
    verify_log_recursion,
)
from .syntax import parse_element, parse_rform

__version__ = "0.1.0"
