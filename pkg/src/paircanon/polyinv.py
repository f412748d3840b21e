"""Exact multivariate polynomials on edge coordinates and their group averages.

Averaging a polynomial over every induced edge-position permutation projects
it onto the subalgebra of functions unchanged by vertex relabeling.  For four
vertices, nine such averages generate that whole subalgebra, and a tuple of
four of them already separates the eleven isomorphism types of simple graphs.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping

from .pairgroup import (
    DEFAULT_MAX_N,
    EdgeVector,
    PairAction,
    _check_enumerable,
    _exact,
    _group_table,
)


@dataclass(frozen=True)
class Monomial:
    """Exponent vector of a power product x1^e1 ... xm^em."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exponents):
            raise ValueError(f"negative exponent in {exponents}")
        object.__setattr__(self, "exponents", exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @classmethod
    def unit(cls, nvars: int) -> Monomial:
        return cls((0,) * nvars)

    def sort_key(self) -> tuple:
        # graded lex with x1 > x2 > ...: degree first, then the exponent tuple
        return (self.degree, self.exponents)


class Polynomial:
    """Sparse polynomial over exact rationals in variables x1..x{nvars}.

    Terms map monomials to nonzero coefficients; equality is term-map
    equality and printing uses descending graded-lex order, so outputs are
    byte-stable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction] | None = None):
        self.nvars = int(nvars)
        if self.nvars < 1:
            raise ValueError(f"need at least one variable, got {nvars}")
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono.exponents) != self.nvars:
                    raise ValueError(
                        f"monomial has {len(mono.exponents)} exponents, "
                        f"expected {self.nvars}"
                    )
                c = _exact(coeff)
                if c:
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def monomial(cls, exponents, coeff=1) -> Polynomial:
        exponents = tuple(exponents)
        return cls(len(exponents), {Monomial(exponents): _exact(coeff)})

    @classmethod
    def variable(cls, s: int, nvars: int) -> Polynomial:
        """The coordinate polynomial x_s."""
        if not 1 <= s <= nvars:
            raise ValueError(f"variable index out of range 1..{nvars}: {s}")
        exps = [0] * nvars
        exps[s - 1] = 1
        return cls.monomial(tuple(exps))

    @property
    def degree(self) -> int:
        return max((mono.degree for mono in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if self.nvars != other.nvars:
                raise ValueError("variable count mismatch")
            terms: dict[Monomial, Fraction] = {}
            for ma, ca in self.terms.items():
                for mb, cb in other.terms.items():
                    mono = Monomial(
                        tuple(a + b for a, b in zip(ma.exponents, mb.exponents))
                    )
                    terms[mono] = terms.get(mono, Fraction(0)) + ca * cb
            return Polynomial(self.nvars, terms)
        scalar = _exact(other)
        return Polynomial(self.nvars, {m: c * scalar for m, c in self.terms.items()})

    __rmul__ = __mul__

    def apply(self, action: PairAction) -> Polynomial:
        """Relabel variables along an induced position permutation.

        Exponents move exactly the way weight vectors do under
        :func:`paircanon.pairgroup.act`, so invariant polynomials are the
        fixed points of this map.
        """
        if action.m != self.nvars:
            raise ValueError(
                f"variable count mismatch: polynomial has {self.nvars}, "
                f"action has {action.m}"
            )
        imap = action.index_map
        moved: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            out = [0] * self.nvars
            for s, e in enumerate(mono.exponents):
                out[imap[s] - 1] = e
            moved[Monomial(tuple(out))] = coeff
        return Polynomial(self.nvars, moved)

    def evaluate(self, x) -> Fraction:
        """Value at an EdgeVector or any sequence of exact scalars."""
        weights = x.weights if isinstance(x, EdgeVector) else tuple(_exact(w) for w in x)
        if len(weights) != self.nvars:
            raise ValueError(
                f"dimension mismatch: {len(weights)} values for {self.nvars} variables"
            )
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for w, e in zip(weights, mono.exponents):
                if e:
                    term *= w**e
            total += term
        return total

    def to_text(self) -> str:
        """One term per line, descending graded-lex, as ``coeff * x<i>^<e> ...``."""
        if not self.terms:
            return "0"
        lines = []
        for mono in sorted(self.terms, key=Monomial.sort_key, reverse=True):
            factors = " ".join(
                f"x{i}^{e}" for i, e in enumerate(mono.exponents, start=1) if e
            )
            lines.append(f"{self.terms[mono]} * {factors or '1'}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial(nvars={self.nvars}, terms={len(self.terms)})"


def reynolds(f: Polynomial, n: int, max_n: int = DEFAULT_MAX_N) -> Polynomial:
    """Average f over all induced edge-position permutations for n vertices.

    The average is fixed by every relabeling, acts as the identity on
    polynomials that are already invariant, and is therefore a projector.
    """
    m = n * (n - 1) // 2
    if f.nvars != m:
        raise ValueError(f"f has {f.nvars} variables but n={n} needs {m}")
    _check_enumerable(n, max_n)
    acc: dict[Monomial, Fraction] = {}
    for _, imap in _group_table(n):
        for mono, coeff in f.terms.items():
            out = [0] * m
            for s, e in enumerate(mono.exponents):
                out[imap[s] - 1] = e
            key = Monomial(tuple(out))
            acc[key] = acc.get(key, Fraction(0)) + coeff
    scale = Fraction(1, math.factorial(n))
    return Polynomial(m, {mono: coeff * scale for mono, coeff in acc.items()})


def n4_generating_set() -> list[Polynomial]:
    """Nine averages generating every relabeling-invariant polynomial for n=4.

    Seven are powers and products with known closed expansions; the two mixed
    ones of degrees 3 and 4 are computed rather than transcribed.
    """
    seeds = [
        (1, 0, 0, 0, 0, 0),  # x1
        (2, 0, 0, 0, 0, 0),  # x1^2
        (1, 0, 0, 0, 0, 1),  # x1 x6
        (3, 0, 0, 0, 0, 0),  # x1^3
        (1, 1, 1, 0, 0, 0),  # x1 x2 x3
        (4, 0, 0, 0, 0, 0),  # x1^4
        (5, 0, 0, 0, 0, 0),  # x1^5
        (2, 1, 0, 0, 0, 0),  # x1^2 x2
        (3, 1, 0, 0, 0, 0),  # x1^3 x2
    ]
    return [reynolds(Polynomial.monomial(e), 4) for e in seeds]


def simple_graph_invariants() -> list[Polynomial]:
    """The four averages whose value tuple separates simple 4-vertex graphs."""
    seeds = [
        (1, 0, 0, 0, 0, 0),  # x1
        (1, 0, 0, 0, 0, 1),  # x1 x6
        (1, 1, 0, 0, 0, 0),  # x1 x2
        (1, 1, 1, 0, 0, 0),  # x1 x2 x3
    ]
    return [reynolds(Polynomial.monomial(e), 4) for e in seeds]


def evaluate(f: Polynomial, x) -> Fraction:
    """Module-level alias for :meth:`Polynomial.evaluate`."""
    return f.evaluate(x)


def classify_simple_graphs_n4() -> dict[tuple[Fraction, ...], list[EdgeVector]]:
    """Partition all 64 simple 4-vertex graphs by their 4-invariant value tuple."""
    invariants = simple_graph_invariants()
    classes: dict[tuple[Fraction, ...], list[EdgeVector]] = {}
    for bits in product((Fraction(0), Fraction(1)), repeat=6):
        x = EdgeVector(4, bits)
        key = tuple(f.evaluate(x) for f in invariants)
        classes.setdefault(key, []).append(x)
    return classes


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, nvars: int) -> Polynomial:
    """Parse a power product like ``x1^2*x2`` or ``x1 x6`` into a polynomial."""
    tokens = text.replace("*", " ").split()
    if not tokens:
        raise ValueError("empty monomial")
    exponents = [0] * nvars
    for token in tokens:
        if token == "1":
            continue
        match = _FACTOR_RE.match(token)
        if not match:
            raise ValueError(f"bad monomial factor: {token!r}")
        i = int(match.group(1))
        if not 1 <= i <= nvars:
            raise ValueError(f"variable x{i} out of range 1..{nvars}")
        exponents[i - 1] += int(match.group(2) or 1)
    return Polynomial.monomial(tuple(exponents))
