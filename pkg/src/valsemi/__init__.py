"""Exact value-semigroup enumeration and embedding-dimension obstructions."""

from valsemi.exact_arith import Rational, binomial, format_rational, parse_rational
from valsemi.semigroup_engine import (
    BoundedSemigroup,
    BoundTooSmall,
    BudgetExceeded,
    EmptyGenerators,
    ExplicitList,
    Profile,
    ProfileHorizonExceeded,
    SemigroupError,
    contains,
    count_below,
    enumerate_up_to,
    realize_generators,
    sumset_r,
)
from valsemi.valuation_lab import (
    INFINITE,
    MonomialValuation,
    SparsePolynomial,
    enumerate_Sd,
    value_of,
    verify_lemma1,
    verify_lemma2,
)
from valsemi.obstruction import (
    Certificate,
    ObstructionReport,
    check,
    example1_certificate,
    example1_generators,
    min_consistent_n,
    theorem1_bound,
)

__version__ = "0.1.0"
