"""Graded monoids of multi-indices and words.

Both monoids are strongly graded by total degree, the degree-zero level
contains only the identity, and degree-one left factors cancel on the
right.  Elements are plain tuples of ints: a multi-index stores one
non-negative count per axis, a word stores its letters (1-based).
"""

from __future__ import annotations

import math
from itertools import product
from typing import Iterator

Element = tuple[int, ...]


class GradedMonoid:
    """Common interface: identity, compose, degree, decompositions,
    predecessors, enumerate.  Exactly two concrete instances exist,
    :class:`MultiIndexes` and :class:`Words`."""

    kind: str = ""

    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError(f"dimension must be >= 1, got {dim}")
        self.dim = dim

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GradedMonoid)
            and self.kind == other.kind
            and self.dim == other.dim
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.dim))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"

    @property
    def identity(self) -> Element:
        raise NotImplementedError

    def validate(self, x) -> Element:
        """Coerce ``x`` to a canonical tuple, rejecting foreign elements."""
        raise NotImplementedError

    def compose(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def degree(self, x: Element) -> int:
        raise NotImplementedError

    def decompositions(self, w: Element) -> list[tuple[Element, Element]]:
        """All pairs (u, v) with u·v = w, in canonical order."""
        raise NotImplementedError

    def predecessors(self, w: Element) -> list[Element]:
        """Elements v such that x·v = w for some degree-one x."""
        raise NotImplementedError

    def enumerate(self, n: int) -> list[Element]:
        """All elements of degree ``n`` in graded-lexicographic order."""
        raise NotImplementedError

    def count(self, n: int) -> int:
        """Number of elements of degree ``n`` (without enumerating them)."""
        raise NotImplementedError

    def elements(self, max_degree: int) -> Iterator[Element]:
        """All elements of degree 0..max_degree, degree by degree."""
        for n in range(max_degree + 1):
            yield from self.enumerate(n)

    def total_count(self, max_degree: int) -> int:
        return sum(self.count(n) for n in range(max_degree + 1))


class MultiIndexes(GradedMonoid):
    """Tuples of d non-negative integers under componentwise addition."""

    kind = "multiindex"

    @property
    def identity(self) -> Element:
        return (0,) * self.dim

    def validate(self, x) -> Element:
        x = tuple(x)
        if len(x) != self.dim:
            raise ValueError(f"multi-index {x!r} has length {len(x)}, expected {self.dim}")
        for c in x:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"multi-index {x!r} has invalid component {c!r}")
        return x

    def compose(self, x: Element, y: Element) -> Element:
        x, y = self.validate(x), self.validate(y)
        return tuple(a + b for a, b in zip(x, y))

    def degree(self, x: Element) -> int:
        return sum(x)

    def decompositions(self, w: Element) -> list[tuple[Element, Element]]:
        # Iterate the left factor u <= w directly; prod(w_j + 1) pairs.
        w = self.validate(w)
        return [
            (u, tuple(a - b for a, b in zip(w, u)))
            for u in product(*(range(c + 1) for c in w))
        ]

    def predecessors(self, w: Element) -> list[Element]:
        w = self.validate(w)
        if sum(w) == 0:
            raise ValueError("the identity has no predecessors")
        return [
            w[:k] + (w[k] - 1,) + w[k + 1 :] for k in range(self.dim) if w[k] > 0
        ]

    def enumerate(self, n: int) -> list[Element]:
        return list(_compositions(n, self.dim))

    def count(self, n: int) -> int:
        return math.comb(n + self.dim - 1, self.dim - 1)


class Words(GradedMonoid):
    """Finite words over the alphabet {1, .., d} under concatenation."""

    kind = "word"

    @property
    def identity(self) -> Element:
        return ()

    def validate(self, x) -> Element:
        x = tuple(x)
        for letter in x:
            if not isinstance(letter, int) or not 1 <= letter <= self.dim:
                raise ValueError(f"word {x!r} has letter {letter!r} outside 1..{self.dim}")
        return x

    def compose(self, x: Element, y: Element) -> Element:
        return self.validate(x) + self.validate(y)

    def degree(self, x: Element) -> int:
        return len(x)

    def decompositions(self, w: Element) -> list[tuple[Element, Element]]:
        w = self.validate(w)
        return [(w[:i], w[i:]) for i in range(len(w) + 1)]

    def predecessors(self, w: Element) -> list[Element]:
        # Deleting the one degree-one left factor: P_{av} = {v}.
        w = self.validate(w)
        if not w:
            raise ValueError("the empty word has no predecessors")
        return [w[1:]]

    def enumerate(self, n: int) -> list[Element]:
        return list(product(range(1, self.dim + 1), repeat=n))

    def count(self, n: int) -> int:
        return self.dim**n


def index_set(kind: str, dim: int) -> GradedMonoid:
    """Build one of the two shipped monoids from its serialized name."""
    if kind == "multiindex":
        return MultiIndexes(dim)
    if kind == "word":
        return Words(dim)
    raise ValueError(f"unknown index-set kind {kind!r}")


def _compositions(n: int, d: int) -> Iterator[Element]:
    if d == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, d - 1):
            yield (first,) + rest


def partial_leq(alpha: Element, beta: Element) -> bool:
    """Componentwise order on multi-indices of equal dimension."""
    if len(alpha) != len(beta):
        raise ValueError(f"dimension mismatch: {alpha!r} vs {beta!r}")
    return all(a <= b for a, b in zip(alpha, beta))


def multinomial(alpha: Element) -> int:
    """|alpha|! / alpha!, the number of words abelianizing to ``alpha``."""
    out = math.factorial(sum(alpha))
    for c in alpha:
        out //= math.factorial(c)
    return out


def abelianize(word: Element, dim: int) -> Element:
    """Letter-count image of a word in the multi-index monoid."""
    Words(dim).validate(word)
    counts = [0] * dim
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)
