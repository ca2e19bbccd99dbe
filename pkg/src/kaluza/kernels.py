"""Kernel certification: from squared monomial norms to a verdict.

A diagonal reproducing kernel with orthogonal monomials is determined
by its coefficient table c(alpha) = 1 / ||z^alpha||^2.  Non-negativity
of the renewal solution q makes the kernel a normalized complete
Nevanlinna-Pick kernel; the two sufficient conditions of `checks`
certify that, and a negative q entry refutes it outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .checks import CheckReport, Violation, b_from_c, check_theorem1, check_theorem2
from .monoid import Element
from .series import CoeffTable, solve_renewal

VERDICTS = (
    "cnp_certified_thm1",
    "cnp_certified_thm2",
    "cnp_certified_both",
    "cnp_witnessed",
    "not_cnp",
)


@dataclass(frozen=True)
class CertReport:
    """Certification outcome, scoped to the checked truncation degree.

    verdict is one of VERDICTS: certified when a sufficient condition
    holds, cnp_witnessed when q >= 0 was merely observed, not_cnp when
    some q entry is negative (then `witness` holds the first such index
    in canonical order).  q_min is the smallest q entry of degree >= 1,
    earliest index on ties; None only for degree-0 tables.  dbr_b is the
    complement table, present when the ratio condition passed.
    """

    verdict: str
    checked_degree: int
    thm1: CheckReport
    thm2: CheckReport
    q_min: Optional[tuple[Element, Fraction]]
    witness: Optional[tuple[Element, Fraction]]
    dbr_b: Optional[CoeffTable]


def coeffs_from_norms(norms: CoeffTable) -> CoeffTable:
    """Reciprocal table c(alpha) = 1 / ||z^alpha||^2 of a normalized kernel."""
    if norms.index_set.kind != "multiindex":
        raise ValueError("norm tables are defined on multi-indices")
    e = norms.index_set.identity
    if norms[e] != 1:
        raise ValueError(f"normalized kernel needs ||1||^2 = 1, got {norms[e]}")
    for a, v in norms.entries():
        if v <= 0:
            raise ValueError(f"squared norms must be positive, got {v} at {a}")
    return norms.map_values(lambda v: 1 / v)


def _first_nonpositive(c: CoeffTable) -> Optional[tuple[Element, Fraction]]:
    for a, v in c.entries():
        if v <= 0:
            return a, v
    return None


def certify(c: CoeffTable) -> CertReport:
    """Run both sufficient conditions and the renewal solve on c.

    The conditions assume strictly positive entries.  If c has a zero
    or negative entry they are inapplicable; both sub-reports then fail
    with a single "positivity" violation and the verdict rests on the
    observed signs of q alone.
    """
    if c.index_set.kind != "multiindex":
        raise ValueError("certification is defined for multi-index tables")
    c.require_unital("certification input")

    bad = _first_nonpositive(c)
    if bad is None:
        thm1 = check_theorem1(c)
        thm2 = check_theorem2(c)
    else:
        mark = Violation("positivity", (bad[0],), bad[1], Fraction(0))
        thm1 = thm2 = CheckReport(False, c.max_degree, (mark,))

    q = solve_renewal(c)
    q_min: Optional[tuple[Element, Fraction]] = None
    witness: Optional[tuple[Element, Fraction]] = None
    for a, v in q.entries():
        if a == q.index_set.identity:
            continue
        if q_min is None or v < q_min[1]:
            q_min = (a, v)
        if witness is None and v < 0:
            witness = (a, v)

    if witness is not None:
        verdict = "not_cnp"
    elif thm1.passed and thm2.passed:
        verdict = "cnp_certified_both"
    elif thm1.passed:
        verdict = "cnp_certified_thm1"
    elif thm2.passed:
        verdict = "cnp_certified_thm2"
    else:
        verdict = "cnp_witnessed"

    dbr_b = b_from_c(c) if thm1.passed else None
    return CertReport(
        verdict=verdict,
        checked_degree=c.max_degree,
        thm1=thm1,
        thm2=thm2,
        q_min=q_min,
        witness=witness,
        dbr_b=dbr_b,
    )
