"""Exact Jones polynomials of braid closures.

The evaluator reduces a word syllable by syllable with a two-term skein
recurrence, shares subproblems through a memo keyed on the cyclic
canonical form, and falls back to a Kauffman-style state sum when the
recurrence does not apply. Everything is exact integer Laurent
arithmetic in the variable s.
"""

from __future__ import annotations

from .braid import (
    BoundsError,
    BraidWord,
    ExponentFamily,
    Syllable,
    parse_braid,
    parse_family,
)
from .bracket import (
    CapExceeded,
    bracket_naive,
    bracket_tl,
    jones_via_bracket,
)
from .engine import (
    FamilySweep,
    GeneratingFunction,
    expand,
    expansion_value,
    family_values,
    jones,
    skein_weights,
    square_free_value,
    step_down,
    step_up,
    unlink_value,
)
from .fibonacci import FibSpec, coefficient_table, general_term, s_basis
from .laurent import LaurentPoly, NotDivisible, ParseError
from .analysis import (
    Classification,
    InvariantViolation,
    RECLASSIFY,
    Stability,
    UnitSearchResult,
    UnitWindow,
    alternating_closed_form,
    alternating_recurrences_check,
    alternating_word,
    classify_pair,
    degree_audit,
    leading_term_scan,
    leading_term_table,
    order_bound_check,
    predict_degrees,
    two_strand_closed_form,
    unit_search,
    unit_window,
)
from .selftest import CheckResult, run_selftest

__version__ = "0.1.0"

__all__ = [
    "BoundsError",
    "BraidWord",
    "CapExceeded",
    "CheckResult",
    "Classification",
    "ExponentFamily",
    "FamilySweep",
    "FibSpec",
    "GeneratingFunction",
    "InvariantViolation",
    "LaurentPoly",
    "NotDivisible",
    "ParseError",
    "RECLASSIFY",
    "Stability",
    "Syllable",
    "UnitSearchResult",
    "UnitWindow",
    "alternating_closed_form",
    "alternating_recurrences_check",
    "alternating_word",
    "bracket_naive",
    "bracket_tl",
    "classify_pair",
    "coefficient_table",
    "degree_audit",
    "expand",
    "expansion_value",
    "family_values",
    "general_term",
    "jones",
    "jones_via_bracket",
    "leading_term_scan",
    "leading_term_table",
    "order_bound_check",
    "parse_braid",
    "parse_family",
    "predict_degrees",
    "run_selftest",
    "s_basis",
    "skein_weights",
    "square_free_value",
    "step_down",
    "step_up",
    "two_strand_closed_form",
    "unit_search",
    "unit_window",
    "unlink_value",
    "__version__",
]
