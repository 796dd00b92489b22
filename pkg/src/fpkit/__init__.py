"""fpkit: exact arithmetic for signed fixed-point data of circle actions.

The package models a finite fixed-point set where each point carries a sign
and a multiset of nonzero integer weights.  On top of that data it provides:

* exact polynomial / rational-function / truncated-series arithmetic
  (:mod:`fpkit.algebra`),
* the JSON data model and per-point statistics (:mod:`fpkit.data`),
* the Hirzebruch-type genus computed two independent ways
  (:mod:`fpkit.genus`),
* necessary-condition checkers for realizability (:mod:`fpkit.identities`),
* signed labeled multigraphs encoding the weight data
  (:mod:`fpkit.multigraph`),
* a small-scale brute-force classifier (:mod:`fpkit.classify`),
* a command-line interface (:mod:`fpkit.cli`).
"""

from fpkit.algebra import (
    BigRational,
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    geometric_rewrite,
    poly_arith,
    poly_gcd,
    ratfun_sum,
)
from fpkit.data import (
    DataFormatError,
    FixedPointData,
    FixedPointDatum,
    chern_map,
    check_congruence,
    default_isotropy_partition,
    index_of,
    parse_data,
    serialize_data,
    weight_count,
)
from fpkit.genus import (
    GenusReport,
    chi_counting,
    chi_series,
    chi_symbolic,
    semifree_report,
    signed_index_counts,
    txy_evaluate,
)
from fpkit.identities import CheckOutcome, validate_all
from fpkit.multigraph import (
    BalanceError,
    SignedMultigraph,
    build_multigraph,
    describes,
    export_dot,
    induced_data,
    sub_multigraph,
)
from fpkit.classify import (
    SearchBounds,
    TrichotomyVerdict,
    enumerate_candidates,
    random_graph_data,
    survey,
    trichotomy_match,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "Polynomial",
    "RationalFunction",
    "TruncatedSeries",
    "geometric_rewrite",
    "poly_arith",
    "poly_gcd",
    "ratfun_sum",
    "DataFormatError",
    "FixedPointData",
    "FixedPointDatum",
    "chern_map",
    "check_congruence",
    "default_isotropy_partition",
    "index_of",
    "parse_data",
    "serialize_data",
    "weight_count",
    "GenusReport",
    "chi_counting",
    "chi_series",
    "chi_symbolic",
    "semifree_report",
    "signed_index_counts",
    "txy_evaluate",
    "CheckOutcome",
    "validate_all",
    "BalanceError",
    "SignedMultigraph",
    "build_multigraph",
    "describes",
    "export_dot",
    "induced_data",
    "sub_multigraph",
    "SearchBounds",
    "TrichotomyVerdict",
    "enumerate_candidates",
    "random_graph_data",
    "survey",
    "trichotomy_match",
]
