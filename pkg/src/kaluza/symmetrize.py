"""Word-level detour for solving the renewal equation on multi-indices.

A multi-index table c lifts to the free monoid by spreading each value
evenly over its fiber, f(w) = c(ab(w)) / N(ab(w)) with N the fiber size.
Solving the word renewal equation and summing fibers back recovers the
multi-index solution exactly, which makes this path an independent
oracle for `solve_renewal`.  Storage is d^N, so it is a desk-scale tool;
the entry guard refuses anything larger.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .monoid import Element, MultiIndexes, Words, abelianize, multinomial
from .series import DEFAULT_GUARD, CoeffTable, solve_renewal

# A lifted table is an ordinary word-kind CoeffTable that happens to be
# constant on fibers; nothing more is tracked.
LiftedTable = CoeffTable


def lift(c: CoeffTable, guard: int = DEFAULT_GUARD) -> LiftedTable:
    """Spread c over word fibers: f(w) = c(ab(w)) / N(ab(w))."""
    if c.index_set.kind != "multiindex":
        raise ValueError("lift starts from a multi-index table")
    c.require_unital("lift input")
    d = c.index_set.dim

    def val(w: Element) -> Fraction:
        a = abelianize(w, d)
        return c[a] / multinomial(a)

    return CoeffTable.from_function(Words(d), c.max_degree, val, guard=guard)


def symmetrize(g: CoeffTable) -> CoeffTable:
    """Push a word table down to multi-indices by summing each fiber."""
    if g.index_set.kind != "word":
        raise ValueError("symmetrize starts from a word table")
    d = g.index_set.dim
    M = MultiIndexes(d)
    sums: dict[Element, Fraction] = {
        a: Fraction(0) for a in M.elements(g.max_degree)
    }
    for w, v in g.entries():
        sums[abelianize(w, d)] += v
    return CoeffTable(M, g.max_degree, sums)


def solve_via_words(c: CoeffTable, guard: int = DEFAULT_GUARD) -> CoeffTable:
    """Solve the renewal equation through the free monoid.

    Returns the same table as solve_renewal(c), entry for entry; any
    difference indicates a bug in one of the two paths.
    """
    return symmetrize(solve_renewal(lift(c, guard=guard)))


def fiber(alpha: Element) -> Iterator[Element]:
    """All words with letter counts alpha, in lexicographic order."""
    counts = list(alpha)
    total = sum(counts)

    def rec(remaining: int) -> Iterator[Element]:
        if remaining == 0:
            yield ()
            return
        for k, c in enumerate(counts):
            if c == 0:
                continue
            counts[k] -= 1
            for rest in rec(remaining - 1):
                yield (k + 1,) + rest
            counts[k] += 1

    return rec(total)
