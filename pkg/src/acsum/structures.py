"""Stable almost complex structure candidates on atomic manifolds.

Three kinds of candidate cover everything the decision pipeline needs:

* :class:`LineBundleAggregate` - a formal Whitney sum of line bundles
  and conjugate line bundles, described by degree-2 first Chern classes
  with multiplicities.  Its total Chern class is a product of binomials
  in the base's cohomology ring.
* :class:`TrivialWithChern` - a bare top-Chern-number stub for stably
  parallelizable bases where a stable structure with that top Chern
  number is asserted rather than constructed.
* :class:`HonestACS` - a marker that the manifold genuinely admits an
  almost complex structure, so its obstruction contribution is zero and
  no Chern data is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import ring
from .manifolds import ManifoldDescriptor, MissingCohomology, kronecker_pair
from .ring import RingElement

__all__ = [
    "BundleSummand",
    "ChernDataUnavailable",
    "HONEST",
    "HonestACS",
    "LineBundleAggregate",
    "NamedStructure",
    "StableStructure",
    "TrivialWithChern",
    "conjugate_aggregate",
    "realification_check",
    "top_chern_number",
    "total_chern",
]


class ChernDataUnavailable(ValueError):
    """The structure carries no stable Chern data (honest structures)."""


@dataclass(frozen=True)
class BundleSummand:
    """``multiplicity`` copies of a line bundle, conjugated or not.

    Conjugation negates the first Chern class.
    """

    first_chern: RingElement
    multiplicity: int
    conjugated: bool = False

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.multiplicity}")
        if not self.first_chern.is_homogeneous(2):
            raise ValueError("a first Chern class must be homogeneous of degree 2")


@dataclass(frozen=True)
class LineBundleAggregate:
    """A formal Whitney sum of line bundles over an atomic base."""

    base: ManifoldDescriptor
    summands: tuple[BundleSummand, ...]
    label: str

    def __post_init__(self):
        if not self.base.is_atomic or self.base.cohomology is None:
            raise MissingCohomology(
                f"aggregate base {self.base.label} has no cohomology presentation"
            )
        for summand in self.summands:
            if summand.first_chern.presentation != self.base.cohomology:
                raise ValueError(
                    f"summand Chern class does not live in the cohomology "
                    f"of {self.base.label}"
                )


@dataclass(frozen=True)
class TrivialWithChern:
    """Stub asserting a stable structure with the given top Chern number."""

    top_chern: int


@dataclass(frozen=True)
class HonestACS:
    """Marker for a base that genuinely admits an almost complex structure."""


HONEST = HonestACS()

StableStructure = Union[LineBundleAggregate, TrivialWithChern, HonestACS]


@dataclass(frozen=True)
class NamedStructure:
    """A structure candidate under the name it is reported by.

    ``external`` marks stubs imported on outside authority; the default
    search skips them unless externals are explicitly enabled.
    """

    name: str
    structure: StableStructure
    external: bool = False
    note: str = ""


def conjugate_aggregate(aggregate: LineBundleAggregate) -> LineBundleAggregate:
    """Flip every summand's conjugation bit."""
    return LineBundleAggregate(
        base=aggregate.base,
        summands=tuple(
            BundleSummand(s.first_chern, s.multiplicity, not s.conjugated)
            for s in aggregate.summands
        ),
        label=f"conj({aggregate.label})",
    )


def total_chern(aggregate: LineBundleAggregate) -> RingElement:
    """Product over summands of (1 + c1)^multiplicity.

    Conjugated summands contribute (1 - c1)^multiplicity.  The empty
    aggregate is the trivial bundle with total Chern class 1.
    """
    presentation = aggregate.base.cohomology
    result = presentation.one()
    for summand in aggregate.summands:
        chern = -summand.first_chern if summand.conjugated else summand.first_chern
        factor = ring.power(presentation.one() + chern, summand.multiplicity)
        result = ring.mul(result, factor)
    return result


def top_chern_number(structure: StableStructure, manifold: ManifoldDescriptor) -> int:
    """The top Chern number of a candidate structure on ``manifold``.

    Honest structures carry no stable Chern data; callers handle them
    before asking (their obstruction contribution is zero outright).
    """
    if isinstance(structure, HonestACS):
        raise ChernDataUnavailable(
            "an honest almost complex structure carries no stable Chern data"
        )
    if isinstance(structure, TrivialWithChern):
        return structure.top_chern
    total = total_chern(structure)
    top = ring.component(total, manifold.dimension)
    return kronecker_pair(top, manifold)


def realification_check(
    aggregate: LineBundleAggregate, manifold: ManifoldDescriptor
) -> bool:
    """Necessary consistency check at the level of Pontrjagin classes.

    The alternating-sign total Pontrjagin class of the underlying real
    bundle of the aggregate equals c(eta) * c(conj eta); this must match
    1 - p_1 + p_2 - ... of the manifold for the aggregate to be stably
    isomorphic to the tangent bundle.  Passing is necessary, not a proof
    of stable isomorphism.
    """
    if not manifold.is_atomic or manifold.cohomology is None:
        raise MissingCohomology(
            f"{manifold.label} carries no Pontrjagin data to check against"
        )
    if aggregate.base.cohomology != manifold.cohomology:
        raise ValueError(
            f"aggregate over {aggregate.base.label} cannot be checked "
            f"against {manifold.label}"
        )
    lhs = ring.mul(total_chern(aggregate), total_chern(conjugate_aggregate(aggregate)))
    rhs = manifold.cohomology.one()
    sign = -1
    for cls in manifold.pontrjagin_classes:
        rhs = rhs + sign * cls
        sign = -sign
    return lhs == rhs
