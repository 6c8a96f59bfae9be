"""Few generators up to radical for determinantal ideals of special matrices.

The constructions take a polynomial matrix with zero or algebraically
dependent entries and return rank-slice sums of minors that generate the
ideal of t-minors up to radical.  A Groebner engine certifies the radical
equalities exactly.
"""

from .errors import (DetgensError, FieldMismatchError, HypothesisViolation, ParseError,
                     RelationError, ResourceLimitExceeded)
from .groebner import (Budget, GroebnerBasis, MonomialOrder, RadicalReport, Verdict, buchberger,
                       ideal_member, normal_form, radical_contained, radical_equal, radical_member)
from .minorposet import (MinorIndex, PosetContext, RankedGenerator, RankedGeneratorSet, leq,
                         lower_neighbors, minors_of_rank, q, q_prefix, rank, t_minors)
from .polyring import (CoeffField, PolyMatrix, PolyRing, Polynomial, determinant, max_power,
                       substitute)
from .reducers import (DependenceRelation, Step2Trace, reduce_disjoint_sets, reduce_theorem_main,
                       step1, step2)
from .sparsegen import (ZeroPattern, antidiagonal_reduce, check_antidiagonal_hypothesis,
                        drop_zero_columns, maxminor_reduce, order_zeros, two_row_reduce)

__all__ = [
    "Budget", "CoeffField", "DependenceRelation", "DetgensError", "FieldMismatchError",
    "GroebnerBasis", "HypothesisViolation", "MinorIndex", "MonomialOrder", "ParseError",
    "PolyMatrix", "PolyRing", "Polynomial", "PosetContext", "RadicalReport", "RankedGenerator",
    "RankedGeneratorSet", "RelationError", "ResourceLimitExceeded", "Step2Trace", "Verdict",
    "ZeroPattern", "antidiagonal_reduce", "buchberger", "check_antidiagonal_hypothesis",
    "determinant", "drop_zero_columns", "ideal_member", "leq", "lower_neighbors", "max_power",
    "maxminor_reduce", "minors_of_rank", "normal_form", "order_zeros", "q", "q_prefix",
    "radical_contained", "radical_equal", "radical_member", "rank", "reduce_disjoint_sets",
    "reduce_theorem_main", "step1", "step2", "substitute", "t_minors", "two_row_reduce",
]

__version__ = "0.1.0"
