"""Sufficient conditions for non-negativity of renewal coefficients.

Two decidable checks on truncated tables: theorem 1 asks the predecessor
ratios r to be non-decreasing along lattice edges and bounded by 1;
theorem 2 bounds each coefficient by the multinomial count and bounds
mixed ratios of neighbouring coefficients.  Either passing forces the
renewal solution q to be non-negative up to the truncation degree.
Also here: the constructors translating between c, r, and b tables,
the word-level ratio condition, and the scalar (d=1) check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .monoid import Element, MultiIndexes, Words, multinomial
from .series import CoeffTable, convolve, multinomial_table


@dataclass(frozen=True)
class Violation:
    """One failed inequality: lhs > rhs at the given indices."""

    cond: str
    at: tuple[Element, ...]
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    checked_degree: int
    violations: tuple[Violation, ...] = field(default=())

    @classmethod
    def from_violations(cls, checked_degree: int, violations: list[Violation]) -> "CheckReport":
        return cls(not violations, checked_degree, tuple(violations))


def require_positive(c: CoeffTable, what: str = "table") -> None:
    """Strict positivity is a hypothesis, not a checked condition."""
    for w, v in c.entries():
        if v <= 0:
            raise ValueError(f"{what} must be strictly positive, got {v} at {w}")


def ratio_table(c: CoeffTable) -> CoeffTable:
    """r(0) = 0 and r(alpha) = c(alpha) / sum of c over immediate predecessors."""
    if c.index_set.kind != "multiindex":
        raise ValueError("ratio tables are defined for multi-index tables")
    c.require_unital("ratio input")
    require_positive(c, "ratio input")
    M = c.index_set
    vals: dict[Element, Fraction] = {M.identity: Fraction(0)}
    for n in range(1, c.max_degree + 1):
        for a in M.enumerate(n):
            vals[a] = c[a] / sum(c[b] for b in M.predecessors(a))
    return CoeffTable(M, c.max_degree, vals)


def check_theorem1(c: CoeffTable) -> CheckReport:
    """Ratio condition: r bounded by 1 and non-decreasing along edges.

    Monotonicity along single edges alpha -> alpha + e_k is equivalent to
    monotonicity for the full componentwise order, so only edges are
    scanned.  Violations come in canonical order, bounds before edges.
    """
    r = ratio_table(c)
    M = r.index_set
    one = Fraction(1)
    violations: list[Violation] = []
    for a, v in r.entries():
        if v > one:
            violations.append(Violation("thm1.bound", (a,), v, one))
    for n in range(r.max_degree):
        for a in M.enumerate(n):
            for k in range(M.dim):
                succ = a[:k] + (a[k] + 1,) + a[k + 1 :]
                if r[a] > r[succ]:
                    violations.append(Violation("thm1.edge", (a, succ), r[a], r[succ]))
    return CheckReport.from_violations(r.max_degree, violations)


def check_theorem2(c: CoeffTable) -> CheckReport:
    """Multinomial bound plus neighbour-ratio bounds.

    Requires c(alpha) <= |alpha|!/alpha! everywhere, and for every alpha
    with |alpha| <= N-2 and axes i <= j,

        c(alpha+e_i) c(alpha+e_j) / (c(alpha) c(alpha+e_i+e_j))
            <= (|alpha|+1)/(|alpha|+2)                          for i != j,
            <= (|alpha|+1)(alpha_i+2) / ((|alpha|+2)(alpha_i+1)) for i == j.

    The off-diagonal expression is symmetric in i and j, so i <= j loses
    nothing.  The ratio scan stops at N-2; the report's checked_degree
    records the table horizon.
    """
    if c.index_set.kind != "multiindex":
        raise ValueError("the multinomial-ratio condition is defined for multi-index tables")
    c.require_unital("check input")
    require_positive(c, "check input")
    M = c.index_set
    violations: list[Violation] = []
    for a, v in c.entries():
        bound = Fraction(multinomial(a))
        if v > bound:
            violations.append(Violation("thm2.bound", (a,), v, bound))

    def bump(a: Element, k: int) -> Element:
        return a[:k] + (a[k] + 1,) + a[k + 1 :]

    for n in range(max(c.max_degree - 1, 0)):
        for a in M.enumerate(n):
            for i in range(M.dim):
                for j in range(i, M.dim):
                    lhs = (c[bump(a, i)] * c[bump(a, j)]) / (c[a] * c[bump(bump(a, i), j)])
                    if i != j:
                        rhs = Fraction(n + 1, n + 2)
                        cond = "thm2.ratio.offdiag"
                    else:
                        rhs = Fraction((n + 1) * (a[i] + 2), (n + 2) * (a[i] + 1))
                        cond = "thm2.ratio.diag"
                    if lhs > rhs:
                        violations.append(
                            Violation(cond, (a, bump(a, i), bump(a, j)), lhs, rhs)
                        )
    return CheckReport.from_violations(c.max_degree, violations)


def c_from_r(r: CoeffTable) -> CoeffTable:
    """Rebuild c from its ratio table: c(alpha) = r(alpha) * sum over predecessors."""
    if r.index_set.kind != "multiindex":
        raise ValueError("ratio tables are defined for multi-index tables")
    M = r.index_set
    if r[M.identity] != 0:
        raise ValueError(f"ratio table must vanish at the identity, got {r[M.identity]}")
    vals: dict[Element, Fraction] = {M.identity: Fraction(1)}
    for n in range(1, r.max_degree + 1):
        for a in M.enumerate(n):
            if r[a] <= 0:
                raise ValueError(f"ratio must be positive off the identity, got {r[a]} at {a}")
            vals[a] = r[a] * sum(vals[b] for b in M.predecessors(a))
    return CoeffTable(M, r.max_degree, vals)


def b_from_c(c: CoeffTable) -> CoeffTable:
    """Complement coefficients b(alpha) = (1 - r(alpha)) * sum of predecessor c.

    b(0) = 0.  Entries are non-negative exactly when the ratio bound
    r <= 1 holds; callers wanting that guarantee run check_theorem1 first.
    """
    if c.index_set.kind != "multiindex":
        raise ValueError("b tables are defined for multi-index tables")
    c.require_unital("b input")
    require_positive(c, "b input")
    M = c.index_set
    vals: dict[Element, Fraction] = {M.identity: Fraction(0)}
    for n in range(1, c.max_degree + 1):
        for a in M.enumerate(n):
            vals[a] = sum(c[b] for b in M.predecessors(a)) - c[a]
    return CoeffTable(M, c.max_degree, vals)


def c_from_b(b: CoeffTable) -> CoeffTable:
    """Inverse of b_from_c: c = d - b*d where d is the multinomial table."""
    if b.index_set.kind != "multiindex":
        raise ValueError("b tables are defined for multi-index tables")
    M = b.index_set
    if b[M.identity] != 0:
        raise ValueError(f"b table must vanish at the identity, got {b[M.identity]}")
    d = multinomial_table(M.dim, b.max_degree)
    return d - convolve(b, d)


def check_word_condition(f: CoeffTable) -> CheckReport:
    """Ratio condition on words: f(av)/f(v) <= f(avb)/f(vb) for letters a, b.

    Scanned for every word v with |v| + 2 within the table horizon.
    """
    if f.index_set.kind != "word":
        raise ValueError("the word condition is defined for word tables")
    f.require_unital("check input")
    require_positive(f, "check input")
    W = f.index_set
    violations: list[Violation] = []
    for n in range(max(f.max_degree - 1, 0)):
        for v in W.enumerate(n):
            for a in range(1, W.dim + 1):
                av = (a,) + v
                lhs = f[av] / f[v]
                for letter in range(1, W.dim + 1):
                    avb = av + (letter,)
                    vb = v + (letter,)
                    rhs = f[avb] / f[vb]
                    if lhs > rhs:
                        violations.append(Violation("word.ratio", (av, avb), lhs, rhs))
    return CheckReport.from_violations(f.max_degree, violations)


def check_kaluza_1d(s: Sequence[Fraction | int]) -> CheckReport:
    """Scalar check: consecutive ratios s_n/s_{n-1} non-decreasing and <= 1."""
    vals = [Fraction(x) for x in s]
    if not vals:
        raise ValueError("need at least s_0")
    if vals[0] != 1:
        raise ValueError(f"sequence must start at 1, got {vals[0]}")
    for n, v in enumerate(vals):
        if v <= 0:
            raise ValueError(f"sequence must be strictly positive, got {v} at n={n}")
    N = len(vals) - 1
    ratios = [vals[n] / vals[n - 1] for n in range(1, N + 1)]
    violations: list[Violation] = []
    one = Fraction(1)
    for n, r in enumerate(ratios, start=1):
        if r > one:
            violations.append(Violation("1d.bound", ((n,),), r, one))
    for n in range(1, len(ratios)):
        if ratios[n - 1] > ratios[n]:
            violations.append(
                Violation("1d.edge", ((n,), (n + 1,)), ratios[n - 1], ratios[n])
            )
    return CheckReport.from_violations(N, violations)


def product_coeffs(seqs: Sequence[Sequence[Fraction | int]], max_degree: int) -> CoeffTable:
    """Separable family c(alpha) = (|alpha|!/alpha!) * prod_i s_i[alpha_i]."""
    if not seqs:
        raise ValueError("need at least one sequence")
    rows = [[Fraction(x) for x in s] for s in seqs]
    for i, row in enumerate(rows):
        if len(row) < max_degree + 1:
            raise ValueError(
                f"sequence {i} has {len(row)} terms, need {max_degree + 1}"
            )
        if row[0] != 1:
            raise ValueError(f"sequence {i} must start at 1, got {row[0]}")
        for v in row:
            if v <= 0:
                raise ValueError(f"sequence {i} must be strictly positive, got {v}")

    def val(a: Element) -> Fraction:
        out = Fraction(multinomial(a))
        for row, k in zip(rows, a):
            out *= row[k]
        return out

    return CoeffTable.from_function(MultiIndexes(len(rows)), max_degree, val)
