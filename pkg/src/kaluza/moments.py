"""Probability measures on [0,1]^d and their coefficient tables.

Supported measures keep every moment rational: Lebesgue measure on
[0,1] and finitely many rational atoms.  A product of one-dimensional
measures yields the separable family c(alpha) = N(alpha) prod_i s_{i,alpha_i};
a d-dimensional atomic measure yields the mixture table
c(alpha) = N(alpha) sum_k w_k t_k^alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .checks import product_coeffs
from .monoid import Element, MultiIndexes, multinomial
from .series import CoeffTable


def _frac01(x, what: str) -> Fraction:
    v = Fraction(x)
    if not 0 <= v <= 1:
        raise ValueError(f"{what} must lie in [0,1], got {v}")
    return v


def _weights_ok(weights: Sequence[Fraction]) -> None:
    for w in weights:
        if w <= 0:
            raise ValueError(f"weights must be positive, got {w}")
    if sum(weights) != 1:
        raise ValueError(f"weights must sum to 1, got {sum(weights)}")


@dataclass(frozen=True)
class Measure1D:
    """One axis: Lebesgue on [0,1], or finitely many atoms (t_k, w_k)."""

    kind: str
    atoms: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        if self.kind == "lebesgue":
            if self.atoms:
                raise ValueError("lebesgue measure takes no atoms")
        elif self.kind == "atomic":
            if not self.atoms:
                raise ValueError("atomic measure needs at least one atom")
            _weights_ok([w for _, w in self.atoms])
        else:
            raise ValueError(f"unknown measure kind {self.kind!r}")

    @classmethod
    def lebesgue(cls) -> "Measure1D":
        return cls("lebesgue")

    @classmethod
    def atomic(cls, atoms) -> "Measure1D":
        return cls(
            "atomic",
            tuple(
                (_frac01(t, "atom location"), Fraction(w)) for t, w in atoms
            ),
        )

    @classmethod
    def point_mass(cls, t) -> "Measure1D":
        return cls.atomic([(t, 1)])


@dataclass(frozen=True)
class AtomicMeasureD:
    """Finitely many atoms (point in [0,1]^d, weight)."""

    atoms: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("need at least one atom")
        dims = {len(t) for t, _ in self.atoms}
        if len(dims) != 1:
            raise ValueError(f"atoms have mixed dimensions {sorted(dims)}")
        if dims == {0}:
            raise ValueError("atoms must have at least one coordinate")
        _weights_ok([w for _, w in self.atoms])

    @classmethod
    def build(cls, atoms) -> "AtomicMeasureD":
        return cls(
            tuple(
                (
                    tuple(_frac01(x, "atom coordinate") for x in t),
                    Fraction(w),
                )
                for t, w in atoms
            )
        )

    @property
    def dim(self) -> int:
        return len(self.atoms[0][0])


def moments(m: Measure1D, max_degree: int) -> list[Fraction]:
    """Exact moment sequence s_n = integral of t^n, n = 0..max_degree."""
    if m.kind == "lebesgue":
        return [Fraction(1, n + 1) for n in range(max_degree + 1)]
    return [
        sum((w * t**n for t, w in m.atoms), Fraction(0))
        for n in range(max_degree + 1)
    ]


def product_measure_coeffs(specs: Sequence[Measure1D], max_degree: int) -> CoeffTable:
    """Coefficient table of the product measure: moments fed axiswise."""
    if not specs:
        raise ValueError("need at least one axis")
    return product_coeffs([moments(m, max_degree) for m in specs], max_degree)


def atomic_coeffs(m: AtomicMeasureD, max_degree: int) -> CoeffTable:
    """Mixture table c(alpha) = (|alpha|!/alpha!) sum_k w_k t_k^alpha.

    Unlike the product families this can hit zero entries (atoms on the
    coordinate axes), which is exactly what makes negativity witnesses
    reachable.
    """

    def val(a: Element) -> Fraction:
        acc = Fraction(0)
        for t, w in m.atoms:
            term = w
            for x, k in zip(t, a):
                term *= x**k
            acc += term
        return multinomial(a) * acc

    return CoeffTable.from_function(MultiIndexes(m.dim), max_degree, val)
