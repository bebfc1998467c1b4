"""Normal ordering in the operator algebra generated by x and I = integral from 0 to x.

The defining relation is ``I x - x I = -I^2``; every word reduces uniquely to
an integer combination of ``x^i I^j``.
"""

from .core import (
    Gen,
    Monomial,
    NormalForm,
    Rational,
    Word,
    binomial,
    falling_factorial,
    nf_add,
    nf_equal,
    nf_scale,
    word_total_degrees,
)
from .oracle import (
    RationalMonomial,
    RationalPolynomial,
    VerificationReport,
    apply_nf_to_monomial,
    apply_word_to_monomial,
    verify_equivalence,
)
from .parser import ExponentOverflowError, ParseError, parse_word
from .rewrite import act, apply_I, apply_I_power, apply_x, normal_order
from .tables import (
    BesselTriangle,
    GeneralizedTriangle,
    bessel_row,
    bessel_triangle,
    bessel_via_identity,
    chain_sum,
    chain_sum_nested,
    general_power_normal_form,
    generalized_triangle,
    word_closed_form,
    xi_power_normal_form,
)

__all__ = [
    "Gen", "Monomial", "NormalForm", "Rational", "Word",
    "binomial", "falling_factorial", "nf_add", "nf_equal", "nf_scale", "word_total_degrees",
    "RationalMonomial", "RationalPolynomial", "VerificationReport",
    "apply_nf_to_monomial", "apply_word_to_monomial", "verify_equivalence",
    "ExponentOverflowError", "ParseError", "parse_word",
    "act", "apply_I", "apply_I_power", "apply_x", "normal_order",
    "BesselTriangle", "GeneralizedTriangle", "bessel_row", "bessel_triangle", "bessel_via_identity",
    "chain_sum", "chain_sum_nested", "general_power_normal_form", "generalized_triangle", "word_closed_form",
    "xi_power_normal_form",
]
