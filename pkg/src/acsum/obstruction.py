"""Integer bookkeeping for the top obstruction to an almost complex structure.

For a 2n-manifold carrying an almost complex structure off an embedded
disc, the single remaining obstruction to extending it over the whole
manifold is an integer multiple k of the corresponding obstruction on
the 2n-sphere.  This module tracks that integer:

* a structure that extends over the manifold as a stable structure with
  top Chern number c contributes k = (chi - c) / 2;
* an honest almost complex structure contributes k = 0;
* under connected sum the coefficients combine as
  k = sum_i k_i - (a - 1) for a summands.

Only k = 0 certifies that the obstruction vanishes.  The sphere
obstruction generates a homotopy group that may have finite order; when
that order is supplied as a modulus, coefficients are reduced into
[0, d) and k = 0 mod d certifies vanishing instead.  No modulus is
assumed by default, so a nonzero coefficient is never evidence of
nonexistence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .manifolds import DimensionMismatch, ManifoldDescriptor
from .structures import HonestACS, NamedStructure, StableStructure, top_chern_number

__all__ = [
    "ObstructionCoefficient",
    "ParityError",
    "StructureAssignment",
    "obstruction_from_stable",
    "sum_obstruction",
    "vanishes",
]


class ParityError(ValueError):
    """chi and the top Chern number disagree mod 2; the input is inconsistent."""


@dataclass(frozen=True)
class ObstructionCoefficient:
    """k means the obstruction equals k times the sphere obstruction.

    ``half_dimension`` is n for a 2n-manifold.  When a modulus d (the
    order of the sphere obstruction) is configured, k is stored reduced
    into [0, d).
    """

    k: int
    half_dimension: int
    modulus: int | None = None

    def __post_init__(self):
        if self.half_dimension < 1:
            raise ValueError("half dimension must be >= 1")
        if self.modulus is not None:
            if self.modulus < 1:
                raise ValueError(f"modulus must be positive, got {self.modulus}")
            object.__setattr__(self, "k", self.k % self.modulus)

    def __str__(self):
        suffix = f" (mod {self.modulus})" if self.modulus is not None else ""
        return f"{self.k}{suffix} * o[S^{2 * self.half_dimension}]"


@dataclass(frozen=True)
class StructureAssignment:
    """One candidate structure per summand of a connected-sum expression."""

    choices: tuple[NamedStructure, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(choice.name for choice in self.choices)


def obstruction_from_stable(
    manifold: ManifoldDescriptor,
    structure: StableStructure,
    *,
    modulus: int | None = None,
) -> ObstructionCoefficient:
    """The obstruction coefficient of a candidate structure on ``manifold``.

    An honest structure extends outright, so its coefficient is 0.
    Otherwise k = (chi - c_n) / 2 where c_n is the top Chern number of
    the stable structure; chi and c_n must agree mod 2 for the structure
    data to be consistent at all.
    """
    n = manifold.dimension // 2
    if isinstance(structure, HonestACS):
        return ObstructionCoefficient(0, n, modulus)
    chi = manifold.euler_characteristic
    c_top = top_chern_number(structure, manifold)
    if (chi - c_top) % 2:
        raise ParityError(
            f"{manifold.label}: chi = {chi} and top Chern number {c_top} "
            f"differ mod 2; no genuine stable structure has this data"
        )
    return ObstructionCoefficient((chi - c_top) // 2, n, modulus)


def sum_obstruction(
    parts: Sequence[ObstructionCoefficient],
) -> ObstructionCoefficient:
    """Combine per-summand coefficients over a connected sum.

    Gluing two structures along the sum loses one sphere obstruction, so
    a summands give k = sum_i k_i - (a - 1).  The modulus is propagated
    when all parts carry the same one.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("cannot combine an empty list of coefficients")
    n = parts[0].half_dimension
    for part in parts:
        if part.half_dimension != n:
            raise DimensionMismatch(
                f"coefficients for 2n = {2 * n} and {2 * part.half_dimension} "
                f"cannot be combined"
            )
    moduli = {part.modulus for part in parts}
    modulus = moduli.pop() if len(moduli) == 1 else None
    total = sum(part.k for part in parts) - (len(parts) - 1)
    return ObstructionCoefficient(total, n, modulus)


def vanishes(coefficient: ObstructionCoefficient) -> bool:
    """True when the obstruction is certifiably zero.

    That means k = 0 exactly, or k = 0 mod d when the order d of the
    sphere obstruction has been configured.
    """
    if coefficient.modulus is not None:
        return coefficient.k % coefficient.modulus == 0
    return coefficient.k == 0
