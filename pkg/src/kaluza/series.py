"""Degree-truncated coefficient tables with exact rational entries.

A table stores one Fraction per monoid element of degree <= N.  All
algebra here is exact; floating point enters only through `evaluate`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping

from .monoid import Element, GradedMonoid, MultiIndexes, multinomial

# Word tables grow like d^N; refuse to build anything bigger than this
# many stored entries unless the caller raises the limit explicitly.
DEFAULT_GUARD = 10**6


class GuardExceeded(ValueError):
    """Requested table would exceed the entry-count guard."""


def _check_guard(index_set: GradedMonoid, max_degree: int, guard: int) -> None:
    total = index_set.total_count(max_degree)
    if total > guard:
        raise GuardExceeded(
            f"table on {index_set!r} up to degree {max_degree} needs "
            f"{total} entries, over the guard of {guard}"
        )


@dataclass(frozen=True)
class CoeffTable:
    """Total map from elements of degree <= max_degree to rationals.

    Immutable by convention; construct through :meth:`from_function`
    or :meth:`from_mapping`, which normalize keys and fill gaps.
    """

    index_set: GradedMonoid
    max_degree: int
    values: dict[Element, Fraction] = field(repr=False)

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError(f"max_degree must be >= 0, got {self.max_degree}")
        expected = self.index_set.total_count(self.max_degree)
        if len(self.values) != expected:
            raise ValueError(
                f"table has {len(self.values)} entries, expected {expected} "
                f"for degree <= {self.max_degree}"
            )

    @classmethod
    def from_function(
        cls,
        index_set: GradedMonoid,
        max_degree: int,
        fn: Callable[[Element], Fraction | int],
        guard: int = DEFAULT_GUARD,
    ) -> "CoeffTable":
        _check_guard(index_set, max_degree, guard)
        vals = {w: Fraction(fn(w)) for w in index_set.elements(max_degree)}
        return cls(index_set, max_degree, vals)

    @classmethod
    def from_mapping(
        cls,
        index_set: GradedMonoid,
        max_degree: int,
        mapping: Mapping[Element, Fraction | int],
        default: Fraction | int = 0,
        guard: int = DEFAULT_GUARD,
    ) -> "CoeffTable":
        """Build a table from a sparse mapping, filling gaps with ``default``."""
        _check_guard(index_set, max_degree, guard)
        vals: dict[Element, Fraction] = {}
        seen = 0
        for w in index_set.elements(max_degree):
            if w in mapping:
                seen += 1
                vals[w] = Fraction(mapping[w])
            else:
                vals[w] = Fraction(default)
        if seen != len(mapping):
            extra = [k for k in mapping if k not in vals]
            raise ValueError(f"mapping has out-of-range or foreign keys: {extra[:3]!r}")
        return cls(index_set, max_degree, vals)

    def __getitem__(self, w: Element) -> Fraction:
        return self.values[tuple(w)]

    def entries(self) -> Iterator[tuple[Element, Fraction]]:
        """(element, value) pairs in canonical graded-lex order."""
        for w in self.index_set.elements(self.max_degree):
            yield w, self.values[w]

    @property
    def is_unital(self) -> bool:
        return self.values[self.index_set.identity] == 1

    def require_unital(self, what: str = "table") -> None:
        if not self.is_unital:
            raise ValueError(
                f"{what} must have value 1 at the identity, "
                f"got {self.values[self.index_set.identity]}"
            )

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def map_values(self, fn: Callable[[Fraction], Fraction | int]) -> "CoeffTable":
        vals = {w: Fraction(fn(v)) for w, v in self.values.items()}
        return CoeffTable(self.index_set, self.max_degree, vals)

    def truncate(self, max_degree: int) -> "CoeffTable":
        """Restrict to a lower degree horizon; extension is impossible."""
        if max_degree > self.max_degree:
            raise ValueError(
                f"cannot extend a table from degree {self.max_degree} to {max_degree}"
            )
        if max_degree == self.max_degree:
            return self
        vals = {
            w: self.values[w] for w in self.index_set.elements(max_degree)
        }
        return CoeffTable(self.index_set, max_degree, vals)

    def _check_compatible(self, other: "CoeffTable") -> None:
        if self.index_set != other.index_set or self.max_degree != other.max_degree:
            raise ValueError(
                f"incompatible tables: {self.index_set!r} up to {self.max_degree} "
                f"vs {other.index_set!r} up to {other.max_degree}"
            )

    def __add__(self, other: "CoeffTable") -> "CoeffTable":
        self._check_compatible(other)
        vals = {w: v + other.values[w] for w, v in self.values.items()}
        return CoeffTable(self.index_set, self.max_degree, vals)

    def __sub__(self, other: "CoeffTable") -> "CoeffTable":
        self._check_compatible(other)
        vals = {w: v - other.values[w] for w, v in self.values.items()}
        return CoeffTable(self.index_set, self.max_degree, vals)

    def __repr__(self) -> str:
        return (
            f"CoeffTable({self.index_set!r}, max_degree={self.max_degree}, "
            f"{len(self.values)} entries)"
        )


def delta(index_set: GradedMonoid, max_degree: int, guard: int = DEFAULT_GUARD) -> CoeffTable:
    """Convolution unit: 1 at the identity, 0 elsewhere."""
    e = index_set.identity
    return CoeffTable.from_function(
        index_set, max_degree, lambda w: 1 if w == e else 0, guard=guard
    )


def multinomial_table(dim: int, max_degree: int) -> CoeffTable:
    """c(alpha) = |alpha|!/alpha!, the expansion of 1/(1 - z_1 - .. - z_d)."""
    return CoeffTable.from_function(
        MultiIndexes(dim), max_degree, lambda a: multinomial(a)
    )


def geometric_table(ratios, max_degree: int) -> CoeffTable:
    """Separable table c(alpha) = prod_j ratios[j]^alpha_j.

    For d=1 this is the classic geometric Kaluza sequence s^n.
    """
    rs = [Fraction(s) for s in ratios]
    if not rs:
        raise ValueError("need at least one ratio")

    def val(a: Element) -> Fraction:
        out = Fraction(1)
        for s, k in zip(rs, a):
            out *= s**k
        return out

    return CoeffTable.from_function(MultiIndexes(len(rs)), max_degree, val)


def convolve(f: CoeffTable, g: CoeffTable) -> CoeffTable:
    """(f*g)(w) = sum over decompositions uv = w of f(u) g(v)."""
    f._check_compatible(g)
    M = f.index_set
    vals = {
        w: sum((f.values[u] * g.values[v] for u, v in M.decompositions(w)), Fraction(0))
        for w in M.elements(f.max_degree)
    }
    return CoeffTable(M, f.max_degree, vals)


def solve_renewal(c: CoeffTable) -> CoeffTable:
    """Solve c = delta_e + c*q for q, exactly, up to the table's degree.

    The solution is forced degree by degree: q is 0 at the identity,
    equals c on degree one, and above that
    q(w) = c(w) - sum of c(u) q(v) over decompositions uv = w with v != w.
    Every q(v) on the right has strictly lower degree, so the recursion
    closes.  Uniqueness makes this the only locally finite solution.
    """
    c.require_unital("renewal input")
    M = c.index_set
    e = M.identity
    q: dict[Element, Fraction] = {e: Fraction(0)}
    for n in range(1, c.max_degree + 1):
        for w in M.enumerate(n):
            acc = c.values[w]
            for u, v in M.decompositions(w):
                if v != w:
                    acc -= c.values[u] * q[v]
            q[w] = acc
    return CoeffTable(M, c.max_degree, q)


def residual(c: CoeffTable, q: CoeffTable) -> CoeffTable:
    """c - delta_e - c*q; identically zero iff q solves the renewal equation."""
    c._check_compatible(q)
    return c - delta(c.index_set, c.max_degree, guard=len(c.values)) - convolve(c, q)


def evaluate(f: CoeffTable, point) -> complex:
    """Truncated sum of f(alpha) z^alpha at a point inside the open l1 ball."""
    if f.index_set.kind != "multiindex":
        raise ValueError("evaluate works on multi-index tables only")
    z = [complex(p) for p in point]
    if len(z) != f.index_set.dim:
        raise ValueError(f"point has {len(z)} coordinates, table dimension is {f.index_set.dim}")
    if sum(abs(p) for p in z) >= 1:
        raise ValueError("point lies outside the open l1 ball")
    total = 0j
    for a, v in f.entries():
        term = complex(v)
        for p, k in zip(z, a):
            term *= p**k
        total += term
    return total
