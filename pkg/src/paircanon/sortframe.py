"""Sorting as canonization for plain coordinate vectors.

Permuting the entries of a vector is the simplest relabeling action; sorting
picks the nondecreasing representative of each orbit.  The sorted entries are
the invariant coordinates of the orbit, and every symmetric polynomial is a
plain polynomial in them, so nothing algebraic is lost by sorting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .pairgroup import VertexPermutation, _exact


@dataclass(frozen=True)
class PointVector:
    """A nonempty vector of exact rationals acted on by permuting coordinates."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(_exact(v) for v in self.values)
        if not values:
            raise ValueError("empty vector")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)


def permute_point(sigma: VertexPermutation, v: PointVector) -> PointVector:
    """Move the entry at position i to position sigma(i)."""
    if sigma.n != v.n:
        raise ValueError(f"dimension mismatch: permutation n={sigma.n}, vector n={v.n}")
    out: list[Fraction | None] = [None] * v.n
    for i, value in enumerate(v.values):
        out[sigma.images[i] - 1] = value
    return PointVector(tuple(out))


def sort_frame(v: PointVector) -> tuple[PointVector, VertexPermutation]:
    """Sorted copy of v plus the permutation that achieves it.

    Repeated values make the achieving permutation non-unique; ranking
    stably by (value, original position) selects the one-line-lex smallest
    of them, so the frame is deterministic.
    """
    ranked = sorted(range(v.n), key=lambda i: (v.values[i], i))
    images = [0] * v.n
    for rank, i in enumerate(ranked):
        images[i] = rank + 1
    ordered = PointVector(tuple(v.values[i] for i in ranked))
    return ordered, VertexPermutation(tuple(images))


def order_statistics(v: PointVector) -> PointVector:
    """The sorted entries; unchanged under any permutation of the input."""
    return sort_frame(v)[0]


def elementary_symmetric(k: int, v: PointVector) -> Fraction:
    """Sum of all k-fold products of distinct entries of v."""
    if not 1 <= k <= v.n:
        raise ValueError(f"need 1 <= k <= {v.n}, got k={k}")
    total = Fraction(0)
    for subset in combinations(v.values, k):
        term = Fraction(1)
        for value in subset:
            term *= value
        total += term
    return total
