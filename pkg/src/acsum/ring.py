"""Exact arithmetic in truncated graded polynomial rings.

The rings handled here are quotients

    Z[x_1, ..., x_k] / (x_1^(e_1+1), ..., x_k^(e_k+1))

where every generator x_i carries a positive even degree.  They serve as
the integral cohomology rings of the manifolds this package models:
complex projective spaces, spheres, products of spheres and the
quaternionic projective plane all have cohomology of this shape.

Coefficients are plain Python integers, so every computation is exact no
matter how large the binomial coefficients grow.  A monomial whose
exponent exceeds a truncation bound is identically zero and is dropped
eagerly.  Elements keep their terms in a canonical order sorted by
exponent vector, which makes equality and hashing structural.

All values are immutable and all operations are pure functions; elements
may be shared freely between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

__all__ = [
    "DegreeError",
    "Generator",
    "PresentationMismatch",
    "RingElement",
    "RingPresentation",
    "add",
    "component",
    "mul",
    "power",
    "truncated_ring",
]


class PresentationMismatch(ValueError):
    """Two elements from different ring presentations were combined."""


class DegreeError(ValueError):
    """A degree argument was odd or outside the ring's grading range."""


@dataclass(frozen=True)
class Generator:
    """A polynomial generator with x^(truncation+1) = 0.

    ``truncation`` is the largest exponent that survives: the generator
    of Z[x]/(x^5) has truncation 4.
    """

    name: str
    degree: int
    truncation: int

    def __post_init__(self):
        if not self.name.isidentifier():
            raise ValueError(f"generator name {self.name!r} is not an identifier")
        if self.degree < 2 or self.degree % 2:
            raise ValueError(
                f"generator {self.name!r}: degree must be even and >= 2, got {self.degree}"
            )
        if self.truncation < 1:
            raise ValueError(
                f"generator {self.name!r}: truncation exponent must be >= 1, got {self.truncation}"
            )


@dataclass(frozen=True)
class RingPresentation:
    """A truncated polynomial ring with even-degree generators.

    ``top_monomial`` is the exponent vector of the monomial that pairs
    with a fundamental class; its degree must equal ``total_dimension``,
    and no representable monomial may exceed that degree.
    """

    generators: tuple[Generator, ...]
    total_dimension: int
    top_monomial: tuple[int, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a presentation needs at least one generator")
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if self.total_dimension < 2 or self.total_dimension % 2:
            raise ValueError(
                f"total dimension must be even and >= 2, got {self.total_dimension}"
            )
        if len(self.top_monomial) != len(self.generators):
            raise ValueError("top monomial length does not match the generator count")
        for e, g in zip(self.top_monomial, self.generators):
            if e < 0 or e > g.truncation:
                raise ValueError(
                    f"top monomial exponent {e} out of range for generator {g.name!r}"
                )
        if self.monomial_degree(self.top_monomial) != self.total_dimension:
            raise ValueError(
                "top monomial degree "
                f"{self.monomial_degree(self.top_monomial)} != total dimension "
                f"{self.total_dimension}"
            )
        top_degree = sum(g.degree * g.truncation for g in self.generators)
        if top_degree > self.total_dimension:
            raise ValueError(
                f"representable monomials reach degree {top_degree}, above the "
                f"total dimension {self.total_dimension}"
            )

    # -- queries ---------------------------------------------------------

    def monomial_degree(self, exponents: Iterable[int]) -> int:
        return sum(e * g.degree for e, g in zip(exponents, self.generators))

    def monomials(self) -> Iterator[tuple[int, ...]]:
        """All representable exponent vectors, in lexicographic order."""
        ranges = [range(g.truncation + 1) for g in self.generators]
        yield from itertools.product(*ranges)

    # -- element constructors ---------------------------------------------

    def element(self, terms: Mapping[tuple[int, ...], int]) -> RingElement:
        """Build an element from an exponent-vector -> coefficient map.

        Zero coefficients are dropped; exponents outside the truncation
        bounds are rejected rather than silently discarded.
        """
        normalized = {}
        for raw, coeff in terms.items():
            exps = tuple(int(e) for e in raw)
            if len(exps) != len(self.generators):
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, "
                    f"expected {len(self.generators)}"
                )
            for e, g in zip(exps, self.generators):
                if e < 0 or e > g.truncation:
                    raise ValueError(
                        f"exponent {e} out of range for generator {g.name!r} "
                        f"(truncation {g.truncation})"
                    )
            coeff = int(coeff)
            if coeff:
                normalized[exps] = normalized.get(exps, 0) + coeff
        ordered = tuple(
            (exps, coeff) for exps, coeff in sorted(normalized.items()) if coeff
        )
        return RingElement(self, ordered)

    def zero(self) -> RingElement:
        return self.element({})

    def one(self) -> RingElement:
        return self.scalar(1)

    def scalar(self, value: int) -> RingElement:
        return self.element({(0,) * len(self.generators): value})

    def generator(self, name: str) -> RingElement:
        for i, g in enumerate(self.generators):
            if g.name == name:
                exps = tuple(1 if j == i else 0 for j in range(len(self.generators)))
                return self.element({exps: 1})
        raise ValueError(f"no generator named {name!r}")

    def __str__(self):
        rels = ", ".join(f"{g.name}^{g.truncation + 1}" for g in self.generators)
        names = ",".join(g.name for g in self.generators)
        return f"Z[{names}]/({rels})"


def truncated_ring(
    generators: Iterable[tuple[str, int, int]],
    total_dimension: int,
    top_monomial: Iterable[int],
) -> RingPresentation:
    """Shorthand constructor from (name, degree, truncation) triples."""
    gens = tuple(Generator(name, degree, trunc) for name, degree, trunc in generators)
    return RingPresentation(gens, total_dimension, tuple(top_monomial))


@dataclass(frozen=True)
class RingElement:
    """An exact element of a :class:`RingPresentation`.

    ``terms`` maps exponent vectors to nonzero integer coefficients,
    stored as a tuple sorted by exponent vector.  Use
    ``presentation.element(...)`` instead of the raw constructor.
    """

    presentation: RingPresentation
    terms: tuple[tuple[tuple[int, ...], int], ...]

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Iterable[int]) -> int:
        target = tuple(exponents)
        for exps, coeff in self.terms:
            if exps == target:
                return coeff
        return 0

    def is_homogeneous(self, degree: int) -> bool:
        """True when every term has the given degree (zero qualifies)."""
        return all(
            self.presentation.monomial_degree(exps) == degree for exps, _ in self.terms
        )

    def degrees(self) -> set[int]:
        return {self.presentation.monomial_degree(exps) for exps, _ in self.terms}

    # -- operators ---------------------------------------------------------

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            return other
        if isinstance(other, int):
            return self.presentation.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.presentation.element({exps: -coeff for exps, coeff in self.terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        return power(self, exponent)

    def _monomial_str(self, exps: tuple[int, ...]) -> str:
        factors = [
            g.name if e == 1 else f"{g.name}^{e}"
            for e, g in zip(exps, self.presentation.generators)
            if e
        ]
        return "*".join(factors)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.terms:
            mono = self._monomial_str(exps)
            if not mono:
                text = str(abs(coeff))
            elif abs(coeff) == 1:
                text = mono
            else:
                text = f"{abs(coeff)}*{mono}"
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self):
        return f"<{self} in {self.presentation}>"


def _require_same_presentation(a: RingElement, b: RingElement):
    if a.presentation != b.presentation:
        raise PresentationMismatch(
            f"cannot combine elements of {a.presentation} and {b.presentation}"
        )


def add(a: RingElement, b: RingElement) -> RingElement:
    """Coefficient-wise sum; terms cancelling to zero are dropped."""
    _require_same_presentation(a, b)
    acc = dict(a.terms)
    for exps, coeff in b.terms:
        acc[exps] = acc.get(exps, 0) + coeff
    return a.presentation.element(acc)


def mul(a: RingElement, b: RingElement) -> RingElement:
    """Distributive product; monomials beyond a truncation bound vanish."""
    _require_same_presentation(a, b)
    pres = a.presentation
    truncations = tuple(g.truncation for g in pres.generators)
    acc: dict[tuple[int, ...], int] = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            exps = tuple(x + y for x, y in zip(ea, eb))
            if any(e > t for e, t in zip(exps, truncations)):
                continue
            acc[exps] = acc.get(exps, 0) + ca * cb
    return pres.element(acc)


def power(a: RingElement, exponent: int) -> RingElement:
    """a**exponent by binary exponentiation; a**0 is 1."""
    if exponent < 0:
        raise ValueError(f"negative exponent {exponent}")
    result = a.presentation.one()
    base = a
    k = exponent
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def component(a: RingElement, degree: int) -> RingElement:
    """The sum of the terms of ``a`` of exactly the given even degree."""
    if degree % 2:
        raise DegreeError(f"degree {degree} is odd; this ring is evenly graded")
    if degree < 0 or degree > a.presentation.total_dimension:
        raise DegreeError(
            f"degree {degree} outside [0, {a.presentation.total_dimension}]"
        )
    pres = a.presentation
    return pres.element(
        {
            exps: coeff
            for exps, coeff in a.terms
            if pres.monomial_degree(exps) == degree
        }
    )
