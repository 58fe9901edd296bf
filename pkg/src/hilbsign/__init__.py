"""Exact Hilbert-polynomial toolkit: Macaulay parameters, sign patterns, oracle."""
from .intpoly import (
    X,
    DegreeUndefined,
    Polynomial,
    binomial_poly,
    evaluate,
    format_poly,
    forward_differences,
    is_integer_valued,
    poly_arith,
    sign_pattern,
)
from .macaulay import (
    InternalNonIntegerParameter,
    NonPositiveCoefficient,
    NotIntegerValued,
    classify_monomial,
    is_hilbert,
    macaulay_params,
    macaulay_term,
    recompose,
)
from .parse import PolySyntaxError, ZeroDenominator, parse_poly
from .realizer import (
    BoundViolated,
    Certificate,
    EmptyPattern,
    LowerCoefficients,
    build_certificate,
    leading_bound,
    minimal_leading,
    realize_signs,
    verify_certificate,
)

__version__ = "0.1.0"
