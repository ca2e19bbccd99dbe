"""Shared generators for the test suite.

Randomized inputs come from seeded random.Random instances so every
run sees the same cases; values are small rationals to keep exact
arithmetic fast.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import settings

from kaluza.monoid import Element, GradedMonoid, MultiIndexes, Words
from kaluza.series import CoeffTable

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

# filled by the acceptance tests; echoed after capture ends so the audit
# trail lands in piped output too
ACCEPTANCE_AUDIT: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_AUDIT:
        terminalreporter.section("acceptance audit")
        for line in ACCEPTANCE_AUDIT:
            terminalreporter.write_line(line)


def rational(rng: random.Random, max_num: int = 9, max_den: int = 9) -> Fraction:
    """A positive fraction with small numerator and denominator."""
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def unit_rational(rng: random.Random, max_den: int = 8) -> Fraction:
    """A fraction in (0, 1]."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(1, den), den)


def random_positive_table(rng: random.Random, M: GradedMonoid, N: int) -> CoeffTable:
    """Unital table with strictly positive entries."""
    e = M.identity
    return CoeffTable.from_function(
        M, N, lambda w: Fraction(1) if w == e else rational(rng)
    )


def random_signed_table(rng: random.Random, M: GradedMonoid, N: int) -> CoeffTable:
    """Arbitrary-sign table, zeros included; exercises pure algebra."""
    return CoeffTable.from_function(
        M, N, lambda w: Fraction(rng.randint(-6, 6), rng.randint(1, 6))
    )


def random_monotone_ratio_table(rng: random.Random, d: int, N: int) -> CoeffTable:
    """Ratio table satisfying the order-monotone, bounded-by-1 hypothesis.

    r(alpha) = prod_j m_j(alpha_j) with each m_j non-decreasing in (0,1]
    is non-decreasing for the componentwise order and stays in (0,1].
    """
    axes = []
    for _ in range(d):
        vals = sorted(unit_rational(rng) for _ in range(N + 1))
        axes.append(vals)
    M = MultiIndexes(d)

    def r(a: Element) -> Fraction:
        if sum(a) == 0:
            return Fraction(0)
        out = Fraction(1)
        for vals, k in zip(axes, a):
            out *= vals[k]
        return out

    return CoeffTable.from_function(M, N, r)


def table_from_q(q: CoeffTable) -> CoeffTable:
    """Forward direction of the renewal equation: build c from a given q.

    Requires q to vanish at the identity; then c(e) = 1 and
    c(w) = sum of c(u) q(v) over decompositions uv = w with v != e.
    By construction solve_renewal(c) == q.
    """
    M = q.index_set
    e = M.identity
    assert q[e] == 0, "q must vanish at the identity"
    c: dict[Element, Fraction] = {e: Fraction(1)}
    for n in range(1, q.max_degree + 1):
        for w in M.enumerate(n):
            acc = Fraction(0)
            for u, v in M.decompositions(w):
                if v != e:
                    acc += c[u] * q[v]
            c[w] = acc
    return CoeffTable(M, q.max_degree, c)


def random_q_table(rng: random.Random, M: GradedMonoid, N: int) -> CoeffTable:
    e = M.identity
    return CoeffTable.from_function(
        M, N, lambda w: Fraction(0) if w == e else Fraction(rng.randint(-4, 6), rng.randint(1, 5))
    )


def random_atoms_1d(rng: random.Random, max_atoms: int = 3) -> list[tuple[Fraction, Fraction]]:
    """Atom list (t_k, w_k), locations in [0,1], weights summing to 1.

    At least one atom is kept off the origin, otherwise the moment
    sequence would be zero from degree 1 on and fall outside the
    strictly-positive Kaluza setting.
    """
    k = rng.randint(1, max_atoms)
    cuts = sorted(rng.randint(1, 19) for _ in range(k - 1))
    bounds = [0] + cuts + [20]
    weights = [Fraction(bounds[i + 1] - bounds[i], 20) for i in range(k)]
    weights = [w for w in weights if w > 0]
    locations = [Fraction(rng.randint(0, 12), 12) for _ in weights]
    if all(t == 0 for t in locations):
        locations[0] = Fraction(rng.randint(1, 12), 12)
    return list(zip(locations, weights))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
