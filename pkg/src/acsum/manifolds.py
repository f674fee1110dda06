"""Manifold descriptors and the formal connected-sum calculus.

A descriptor records exactly the invariants the decision pipeline
consumes: Euler characteristic, signature, an optional cohomology
presentation with Pontrjagin classes for atomic manifolds, the full
table of Pontrjagin numbers, an orientation sign, and an optional
user-asserted connectivity.

Connected sums are kept formal.  No cohomology ring is built for a sum;
only the aggregate invariants are tracked, using

    chi(M_1 # ... # M_a) = sum_i chi(M_i) - 2(a - 1)

together with additivity of the signature and of every Pontrjagin
number (a connected sum is oriented-cobordant to the disjoint union).

Descriptors are immutable after construction and all operations are
pure, so values can be shared freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .ring import DegreeError, PresentationMismatch, RingElement, RingPresentation, mul

__all__ = [
    "DimensionMismatch",
    "ManifoldDescriptor",
    "MissingCohomology",
    "atomic_manifold",
    "connected_sum",
    "conjugate_label",
    "kronecker_pair",
    "partition_label",
    "partitions",
    "pontrjagin_numbers_of",
    "reverse_orientation",
]


class MissingCohomology(ValueError):
    """An operation needed cohomology data the descriptor does not carry."""


class DimensionMismatch(ValueError):
    """Summands of different dimensions cannot be combined."""


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n as descending tuples, largest part first."""

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    yield from rec(n, n)


def partition_label(parts: Sequence[int]) -> str:
    """Canonical name of a Pontrjagin monomial, e.g. (2,1,1) -> 'p2*p1^2'."""
    pieces = []
    for part, group in itertools.groupby(parts):
        count = len(list(group))
        pieces.append(f"p{part}" if count == 1 else f"p{part}^{count}")
    return "*".join(pieces)


@dataclass(frozen=True)
class ManifoldDescriptor:
    """Invariant data of a closed oriented even-dimensional manifold.

    ``summands`` is empty for atomic manifolds; a formal connected sum
    records the labels of its parts and carries no cohomology
    presentation.  ``orientation_sign`` is the value obtained by pairing
    the presentation's top monomial against the fundamental class.
    """

    label: str
    dimension: int
    euler_characteristic: int
    signature: int
    orientation_sign: int = 1
    cohomology: RingPresentation | None = None
    pontrjagin_classes: tuple[RingElement, ...] = ()
    pontrjagin_numbers: Mapping[str, int] = field(default_factory=dict)
    connectivity: int | None = None
    summands: tuple[str, ...] = ()

    def __post_init__(self):
        if self.dimension < 2 or self.dimension % 2:
            raise ValueError(
                f"{self.label}: dimension must be even and >= 2, got {self.dimension}"
            )
        if self.orientation_sign not in (1, -1):
            raise ValueError(f"{self.label}: orientation sign must be +1 or -1")
        if self.dimension % 4 == 2 and self.signature != 0:
            raise ValueError(
                f"{self.label}: dimension is 2 mod 4, so the signature must be 0"
            )
        if self.summands:
            if len(self.summands) < 2:
                raise ValueError(f"{self.label}: a formal sum needs >= 2 summands")
            if self.cohomology is not None:
                raise ValueError(
                    f"{self.label}: formal sums carry no cohomology presentation"
                )
        if self.cohomology is not None:
            if self.cohomology.total_dimension != self.dimension:
                raise ValueError(
                    f"{self.label}: cohomology top degree "
                    f"{self.cohomology.total_dimension} != dimension {self.dimension}"
                )
        if self.connectivity is not None and self.connectivity < 0:
            raise ValueError(f"{self.label}: connectivity must be non-negative")

    @property
    def is_atomic(self) -> bool:
        return not self.summands

    def __str__(self):
        return self.label


def _pontrjagin_class(
    classes: Sequence[RingElement], index: int, cohomology: RingPresentation
) -> RingElement:
    if 1 <= index <= len(classes):
        return classes[index - 1]
    return cohomology.zero()


def _numbers_from_classes(
    dimension: int,
    cohomology: RingPresentation,
    classes: Sequence[RingElement],
    orientation_sign: int,
) -> dict[str, int]:
    if dimension % 4:
        return {}
    n = dimension // 4
    top = cohomology.top_monomial
    numbers = {}
    for parts in partitions(n):
        product = cohomology.one()
        for index in parts:
            product = mul(product, _pontrjagin_class(classes, index, cohomology))
        numbers[partition_label(parts)] = product.coefficient(top) * orientation_sign
    return numbers


def atomic_manifold(
    label: str,
    *,
    dimension: int,
    euler_characteristic: int,
    signature: int,
    cohomology: RingPresentation,
    orientation_sign: int = 1,
    pontrjagin_classes: Sequence[RingElement] = (),
    connectivity: int | None = None,
) -> ManifoldDescriptor:
    """Build an atomic descriptor, deriving its Pontrjagin numbers.

    Each supplied Pontrjagin class p_i must be homogeneous of degree 4i
    in the given cohomology presentation.
    """
    classes = tuple(pontrjagin_classes)
    for i, cls in enumerate(classes, start=1):
        if cls.presentation != cohomology:
            raise PresentationMismatch(
                f"{label}: Pontrjagin class p{i} lives in a different ring"
            )
        if not cls.is_homogeneous(4 * i):
            raise ValueError(f"{label}: p{i} must be homogeneous of degree {4 * i}")
    numbers = _numbers_from_classes(
        dimension, cohomology, classes, orientation_sign
    )
    return ManifoldDescriptor(
        label=label,
        dimension=dimension,
        euler_characteristic=euler_characteristic,
        signature=signature,
        orientation_sign=orientation_sign,
        cohomology=cohomology,
        pontrjagin_classes=classes,
        pontrjagin_numbers=numbers,
        connectivity=connectivity,
    )


def kronecker_pair(element: RingElement, manifold: ManifoldDescriptor) -> int:
    """Pair a top-degree class against the fundamental class.

    The result is the coefficient of the presentation's top monomial
    times the orientation sign, so reversing orientation negates it.
    """
    if not manifold.is_atomic or manifold.cohomology is None:
        raise MissingCohomology(
            f"{manifold.label} carries no cohomology presentation to pair against"
        )
    if element.presentation != manifold.cohomology:
        raise PresentationMismatch(
            f"class does not live in the cohomology of {manifold.label}"
        )
    if not element.is_homogeneous(manifold.dimension):
        raise DegreeError(
            f"pairing against {manifold.label} needs a homogeneous class of "
            f"degree {manifold.dimension}"
        )
    top = manifold.cohomology.top_monomial
    return element.coefficient(top) * manifold.orientation_sign


def _balanced(text: str) -> bool:
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
    return depth == 0


def conjugate_label(label: str) -> str:
    """Wrap a label as conj(label), unwrapping an existing conj(...)."""
    if label.startswith("conj(") and label.endswith(")") and _balanced(label[5:-1]):
        return label[5:-1]
    return f"conj({label})"


def reverse_orientation(manifold: ManifoldDescriptor) -> ManifoldDescriptor:
    """The same manifold with the opposite orientation.

    The Euler characteristic and Pontrjagin classes are unchanged; the
    signature, the orientation sign and every Pontrjagin number are
    negated.  Applying this twice restores the original descriptor.
    """
    return ManifoldDescriptor(
        label=conjugate_label(manifold.label),
        dimension=manifold.dimension,
        euler_characteristic=manifold.euler_characteristic,
        signature=-manifold.signature,
        orientation_sign=-manifold.orientation_sign,
        cohomology=manifold.cohomology,
        pontrjagin_classes=manifold.pontrjagin_classes,
        pontrjagin_numbers={
            key: -value for key, value in manifold.pontrjagin_numbers.items()
        },
        connectivity=manifold.connectivity,
        summands=tuple(conjugate_label(s) for s in manifold.summands),
    )


def connected_sum(summands: Sequence[ManifoldDescriptor]) -> ManifoldDescriptor:
    """The formal connected sum of the given descriptors.

    A single summand is returned unchanged.  For two or more, the Euler
    characteristics combine with the -2(a-1) correction, the signatures
    and all Pontrjagin numbers add, and the asserted connectivity is the
    minimum of the summands' (unknown if any is unasserted).
    """
    summands = list(summands)
    if not summands:
        raise ValueError("connected sum of an empty list")
    dimension = summands[0].dimension
    for s in summands:
        if s.dimension != dimension:
            raise DimensionMismatch(
                f"cannot sum {summands[0].label} (dim {dimension}) with "
                f"{s.label} (dim {s.dimension})"
            )
    if len(summands) == 1:
        return summands[0]
    alpha = len(summands)
    chi = sum(s.euler_characteristic for s in summands) - 2 * (alpha - 1)
    tau = sum(s.signature for s in summands)
    keys: list[str] = []
    for s in summands:
        for key in s.pontrjagin_numbers:
            if key not in keys:
                keys.append(key)
    numbers = {
        key: sum(s.pontrjagin_numbers.get(key, 0) for s in summands) for key in keys
    }
    connectivities = [s.connectivity for s in summands]
    connectivity = None if None in connectivities else min(connectivities)
    return ManifoldDescriptor(
        label=" # ".join(s.label for s in summands),
        dimension=dimension,
        euler_characteristic=chi,
        signature=tau,
        pontrjagin_numbers=numbers,
        connectivity=connectivity,
        summands=tuple(s.label for s in summands),
    )


def pontrjagin_numbers_of(manifold: ManifoldDescriptor) -> dict[str, int]:
    """The partition-indexed Pontrjagin numbers of a descriptor.

    Empty when the dimension is not divisible by 4.
    """
    if manifold.dimension % 4:
        return {}
    return dict(manifold.pontrjagin_numbers)
