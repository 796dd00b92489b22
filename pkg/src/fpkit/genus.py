"""Genus computation for signed fixed-point data, by two independent routes.

For data with points p carrying sign eps(p) and n nonzero weights w_{p,1..n},
the i-th genus component is the localization sum

    chi_i  =  sum_p  eps(p) * sigma_i(t^{w_p,1}, ..., t^{w_p,n})
                       / prod_j (1 - t^{w_p,j}),

with sigma_i the i-th elementary symmetric polynomial.  Rewriting each
negative-weight factor through 1/(1 - t^w) = -t^|w|/(1 - t^|w|) turns every
term into +-J_p(t) / prod_j (1 - t^|w_j|) with J_p a true polynomial, and the
constant term of the sum's expansion at t = 0 is (-1)^i * N_i, where N_i is
the signed number of points with exactly i negative weights.  That identity is
pure algebra and holds for arbitrary data; for data of an actual manifold the
sum is moreover a constant.

Two routes are implemented and kept independent so they can certify each
other:

* the counting route reads N_i straight off the signs and indices;
* the symbolic route builds the rational functions exactly (`chi_symbolic`)
  and expands them as truncated series via the geometric rewrite
  (`chi_series`), taking constant terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from fpkit.algebra import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    geometric_rewrite,
    one_minus_power,
    ratfun_sum,
)
from fpkit.data import FixedPointData, FixedPointDatum


def signed_index_counts(data: FixedPointData) -> tuple[int, ...]:
    """N_0..N_n, where N_i sums the signs of the points with i negative weights."""
    counts = [0] * (data.n + 1)
    for point in data.points:
        counts[point.index] += point.sign
    return tuple(counts)


@dataclass(frozen=True)
class GenusReport:
    """Bundle of genus values with their defining identities enforced.

    chi[i] is the i-th genus component, N[i] the signed index count, todd the
    0-th component, and txy the genus polynomial coefficients (equal to chi).
    ``symbolic_constant`` records whether the symbolic route produced a
    constant rational function for every i.
    """

    chi: tuple[int, ...]
    N: tuple[int, ...]
    todd: int
    symbolic_constant: bool
    txy: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (len(self.chi) == len(self.N) == len(self.txy)):
            raise ValueError("chi, N and txy must all have n + 1 entries")
        for i, (c, count) in enumerate(zip(self.chi, self.N)):
            if c != (-1) ** i * count:
                raise ValueError(f"chi[{i}] must equal (-1)^{i} * N[{i}]")
        if self.todd != self.chi[0]:
            raise ValueError("todd must equal chi[0]")
        if self.txy != self.chi:
            raise ValueError("txy must equal chi")

    def to_dict(self) -> dict:
        return {
            "chi": list(self.chi),
            "N": list(self.N),
            "todd": self.todd,
            "symbolic_constant": self.symbolic_constant,
            "txy": list(self.txy),
        }


@dataclass(frozen=True)
class SymbolicChi:
    """One genus component from the symbolic route.

    ``function`` is the reduced rational function; ``constant`` says whether
    it reduced to a constant; ``constant_term`` is the value at t = 0 taken
    through the series route, which is defined even when the function is not
    constant.
    """

    function: RationalFunction
    constant: bool
    constant_term: Fraction


def _point_parts(point: FixedPointDatum, i: int) -> tuple[int, Polynomial]:
    """Sign and numerator polynomial of one localization term.

    Multiplying the term by prod_{w<0} (-t^|w|)/(-t^|w|) clears all negative
    exponents: the returned polynomial is t^(sum of |negative weights|) times
    sigma_i evaluated at the weight monomials, and the returned sign is
    eps(p) * (-1)^(number of negative weights).
    """
    shift = sum(-w for w in point.weights if w < 0)
    # Elementary symmetric polynomial in the monomials t^w, one weight at a
    # time, stored as exponent -> coefficient (exponents may be negative
    # until the shift is applied).
    elementary: list[dict[int, int]] = [{} for _ in range(i + 1)]
    elementary[0][0] = 1
    for w in point.weights:
        for k in range(i, 0, -1):
            lower = elementary[k - 1]
            if not lower:
                continue
            target = elementary[k]
            for exponent, coefficient in lower.items():
                key = exponent + w
                target[key] = target.get(key, 0) + coefficient
    numerator = Polynomial.from_terms(
        {exponent + shift: c for exponent, c in elementary[i].items()}
    )
    lead_sign = point.sign * (-1 if point.index % 2 else 1)
    return lead_sign, numerator


def chi_symbolic(data: FixedPointData, i: int) -> SymbolicChi:
    """The i-th genus component as an exact reduced rational function."""
    if not 0 <= i <= data.n:
        raise ValueError(f"genus component index must lie in 0..{data.n}")
    terms = []
    for point in data.points:
        lead_sign, numerator = _point_parts(point, i)
        denominator = Polynomial.one()
        for w in point.weights:
            denominator = denominator * one_minus_power(abs(w))
        terms.append(RationalFunction(numerator.scaled(lead_sign), denominator))
    total = ratfun_sum(terms)
    constant_term = chi_series(data, i, 0).constant_term
    return SymbolicChi(total, total.is_constant, constant_term)


def chi_series(data: FixedPointData, i: int, order: int) -> TruncatedSeries:
    """The i-th genus component expanded as a truncated series.

    Each term's denominator factors are expanded individually with
    `geometric_rewrite`, so this route never forms the reduced rational
    function; it is the independent cross-check for `chi_symbolic`.
    """
    if not 0 <= i <= data.n:
        raise ValueError(f"genus component index must lie in 0..{data.n}")
    total = TruncatedSeries.zero(order)
    for point in data.points:
        lead_sign, numerator = _point_parts(point, i)
        term = numerator.to_series(order)
        for w in point.weights:
            term = term * geometric_rewrite(abs(w), order)
        total = total + term * lead_sign
    return total


def default_series_order(data: FixedPointData) -> int:
    """A truncation order large enough to expose non-constancy in practice."""
    return 1 + sum(abs(w) for point in data.points for w in point.weights)


def chi_counting(data: FixedPointData) -> GenusReport:
    """The full genus report from the counting route.

    All numeric fields come from signs and indices alone; the symbolic route
    is probed only for the ``symbolic_constant`` flag, which reports whether
    every component reduced to a constant rational function.
    """
    counts = signed_index_counts(data)
    chi = tuple((-1) ** i * c for i, c in enumerate(counts))
    constant = all(chi_symbolic(data, i).constant for i in range(data.n + 1))
    return GenusReport(chi=chi, N=counts, todd=chi[0], symbolic_constant=constant, txy=chi)


def txy_evaluate(data: FixedPointData) -> tuple[int, ...]:
    """Genus polynomial coefficients T_0..T_n, cross-certified.

    Values are computed by counting and verified against the series-route
    constant terms; a mismatch would mean a bookkeeping bug and raises
    ``ArithmeticError`` rather than returning a wrong value.
    """
    counts = signed_index_counts(data)
    values = tuple((-1) ** i * c for i, c in enumerate(counts))
    for i, value in enumerate(values):
        term = chi_series(data, i, 0).constant_term
        if term != value:
            raise ArithmeticError(
                f"genus cross-check failed at component {i}: "
                f"counting gives {value}, series gives {term}"
            )
    return values


@dataclass(frozen=True)
class SemifreeReport:
    """Genus statistics specific to data whose weights are all +-1."""

    todd: int
    counts: tuple[int, ...]
    expected_counts: tuple[int, ...]
    binomial_identity: bool
    bound: int
    bound_met: bool

    def to_dict(self) -> dict:
        return {
            "todd": self.todd,
            "counts": list(self.counts),
            "expected_counts": list(self.expected_counts),
            "binomial_identity": self.binomial_identity,
            "bound": self.bound,
            "bound_met": self.bound_met,
        }


def semifree_report(data: FixedPointData) -> SemifreeReport:
    """Report for semi-free data: every weight must be +1 or -1.

    Checks the binomial pattern N_i = Todd * C(n, i) and the resulting lower
    bound |Todd| * 2^n on the number of points.  Raises ``ValueError`` when a
    weight of magnitude > 1 is present.
    """
    for point in data.points:
        for w in point.weights:
            if abs(w) != 1:
                raise ValueError(
                    f"action not semi-free: weight {w} at {point.id!r}"
                )
    counts = signed_index_counts(data)
    todd = counts[0]
    expected = tuple(todd * math.comb(data.n, i) for i in range(data.n + 1))
    bound = abs(todd) * 2**data.n
    return SemifreeReport(
        todd=todd,
        counts=counts,
        expected_counts=expected,
        binomial_identity=counts == expected,
        bound=bound,
        bound_met=len(data.points) >= bound,
    )
