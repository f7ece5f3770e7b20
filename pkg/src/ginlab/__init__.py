"""Groebner bases, generic initial ideals and regularity over QQ."""

from .constructions import (
    Disagreement,
    GapWitness,
    distinguishing_ideal,
    first_disagreement,
    is_rlex_up_to,
    regularity_gap_ideal,
    rlex_gap_witness,
)
from .errors import (
    DimensionMismatch,
    GinlabError,
    NoDisagreement,
    NonHomogeneousError,
    NotBorelFixedError,
    NotDivisibleError,
    ParseError,
    SingularMatrixError,
    StabilizationFailure,
    ZeroPolynomialError,
)
from .gin import GinConfig, GinResult, gin, random_transform, regularity, segment_shortcut
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    dim_in_degree,
    initial_ideal,
    membership,
    reduce,
    reduce_gb,
    reduced_groebner,
    s_poly,
)
from .monideal import (
    BettiTable,
    MonomialIdeal,
    betti_table,
    borel_leq,
    hilbert_count,
    is_borel_fixed,
    is_segment,
    is_segment_ideal,
    minimal_generators,
    regularity_borel,
    regularity_monomial,
)
from .monomial import Monomial, monomial_arith
from .orders import LEX, RLEX, Comparison, OrderKind, OrderSpec, cmp_monomials, lex, rlex, sorted_monomials, weight
from .parsing import parse_ideal, parse_monomial, parse_order, parse_polynomial
from .polynomial import Polynomial, Term, leading_term, poly_arith
from .ring import Ring
from .transform import TransformMatrix, apply_transform

__version__ = "0.1.0"
