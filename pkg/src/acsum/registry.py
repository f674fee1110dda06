"""Built-in manifolds and their canonical stable-structure candidates.

The registry covers the spaces the engine works with out of the box:

* ``CP(n)``            complex projective space, real dimension 2n
* ``conjCP(n)``        the same manifold with the opposite orientation
* ``Sphere(n)``        the sphere S^(2n)
* ``SphereProduct(a,b)`` the product S^(2a) x S^(2b)
* ``HP2``              the quaternionic projective plane

Parameters count in half-dimensions, so ``SphereProduct(5,5)`` is the
20-dimensional S^10 x S^10.  Entries are constructed once and cached;
descriptors are immutable and safe to share.

Characteristic data that does not follow from the ring presentations
(tangent Pontrjagin classes, honest almost-complex markers, top-Chern
stubs) is standard-reference material and is flagged in the entry notes
where an outside authority is being trusted.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .manifolds import ManifoldDescriptor, atomic_manifold, reverse_orientation
from .structures import (
    HONEST,
    BundleSummand,
    HonestACS,
    LineBundleAggregate,
    NamedStructure,
    TrivialWithChern,
)
from .ring import truncated_ring

__all__ = [
    "BUILTIN_NAMES",
    "RegistryEntry",
    "UnknownManifold",
    "builtin",
    "has_honest_structure",
]


class UnknownManifold(ValueError):
    """No builtin or user-defined manifold matches the requested name."""


@dataclass(frozen=True)
class RegistryEntry:
    """A descriptor plus the named structure candidates searched for it."""

    descriptor: ManifoldDescriptor
    canonical_structures: tuple[NamedStructure, ...] = ()
    notes: str = ""


BUILTIN_NAMES = ("CP", "conjCP", "Sphere", "SphereProduct", "HP2")

_PARAM_COUNTS = {"CP": 1, "conjCP": 1, "Sphere": 1, "SphereProduct": 2, "HP2": 0}


def has_honest_structure(entry: RegistryEntry) -> bool:
    return any(
        isinstance(named.structure, HonestACS)
        for named in entry.canonical_structures
    )


def _trivial_stub(half_dimension: int, top_chern: int = 0, **kwargs) -> NamedStructure:
    return NamedStructure(
        f"trivial(c{half_dimension}={top_chern})",
        TrivialWithChern(top_chern),
        **kwargs,
    )


def _cp(n: int) -> RegistryEntry:
    if n < 1:
        raise UnknownManifold(f"CP needs a positive half-dimension, got {n}")
    presentation = truncated_ring([("x", 2, n)], total_dimension=2 * n, top_monomial=(n,))
    # Tangent Pontrjagin data via the standard total class (1 + x^2)^(n+1).
    classes = tuple(
        presentation.element({(2 * i,): math.comb(n + 1, i)})
        for i in range(1, n // 2 + 1)
    )
    descriptor = atomic_manifold(
        f"CP({n})",
        dimension=2 * n,
        euler_characteristic=n + 1,
        signature=1 if n % 2 == 0 else 0,
        cohomology=presentation,
        pontrjagin_classes=classes,
        connectivity=1,
    )
    structures = [
        NamedStructure("std", HONEST, note="complex manifold, honest structure")
    ]
    if n % 2 == 0:
        x = presentation.generator("x")
        aggregate = LineBundleAggregate(
            base=descriptor,
            summands=(BundleSummand(x, n - 1), BundleSummand(x, 2, conjugated=True)),
            label=f"{n - 1}*x + 2*conj(x)",
        )
        structures.append(
            NamedStructure(
                "eta",
                aggregate,
                note="(n-1) hyperplane bundles plus two conjugates; "
                "realifies to the stable tangent bundle",
            )
        )
    return RegistryEntry(descriptor, tuple(structures))


def _conj_cp(n: int) -> RegistryEntry:
    base = _cp(n)
    descriptor = reverse_orientation(base.descriptor)
    structures = []
    if n % 2 == 1:
        structures.append(
            NamedStructure(
                "std",
                HONEST,
                note="for odd n the orientation reversal is diffeomorphic "
                "to CP(n) itself",
            )
        )
    x = descriptor.cohomology.generator("x")
    aggregate = LineBundleAggregate(
        base=descriptor,
        summands=(BundleSummand(x, n), BundleSummand(x, 1, conjugated=True)),
        label=f"{n}*x + conj(x)",
    )
    structures.append(
        NamedStructure(
            "eta",
            aggregate,
            note="n hyperplane bundles plus one conjugate; realifies to the "
            "stable tangent bundle of the reversed orientation",
        )
    )
    return RegistryEntry(descriptor, tuple(structures))


def _sphere(n: int) -> RegistryEntry:
    if n < 1:
        raise UnknownManifold(f"Sphere needs a positive half-dimension, got {n}")
    presentation = truncated_ring(
        [("x", 2 * n, 1)], total_dimension=2 * n, top_monomial=(1,)
    )
    descriptor = atomic_manifold(
        f"Sphere({n})",
        dimension=2 * n,
        euler_characteristic=2,
        signature=0,
        cohomology=presentation,
        connectivity=2 * n - 1,
    )
    structures = []
    if n == 1:
        structures.append(
            NamedStructure("std", HONEST, note="the 2-sphere is CP(1)")
        )
    elif n == 3:
        structures.append(
            NamedStructure(
                "std", HONEST, note="S^6 carries the octonion cross-product structure"
            )
        )
    structures.append(
        _trivial_stub(n, note="stably parallelizable; trivial stable structure")
    )
    return RegistryEntry(descriptor, tuple(structures))


def _sphere_product(a: int, b: int) -> RegistryEntry:
    if a < 1 or b < 1:
        raise UnknownManifold(
            f"SphereProduct needs positive half-dimensions, got ({a}, {b})"
        )
    presentation = truncated_ring(
        [("x", 2 * a, 1), ("y", 2 * b, 1)],
        total_dimension=2 * (a + b),
        top_monomial=(1, 1),
    )
    descriptor = atomic_manifold(
        f"SphereProduct({a},{b})",
        dimension=2 * (a + b),
        euler_characteristic=4,
        signature=0,
        cohomology=presentation,
        connectivity=2 * min(a, b) - 1,
    )
    structures = []
    if (a, b) in ((1, 1), (3, 3)):
        note = (
            "product of two copies of CP(1)"
            if a == 1
            else "product of two almost complex 6-spheres"
        )
        structures.append(NamedStructure("std", HONEST, note=note))
    structures.append(
        _trivial_stub(a + b, note="stably parallelizable; trivial stable structure")
    )
    notes = ""
    if (a, b) == (2, 2):
        structures.append(
            _trivial_stub(
                4,
                top_chern=4,
                external=True,
                note="top-Chern stub replaying an existence result taken on "
                "outside authority; skipped unless externals are enabled",
            )
        )
        notes = (
            "does not itself admit an almost complex structure, although "
            "its sum with conj(CP(4)) does"
        )
    if (a, b) == (5, 5):
        notes = (
            "existence on repeated sums of this product is classified "
            "externally by a congruence modulo 1152; the engine reports "
            "UNKNOWN rather than derive it"
        )
    return RegistryEntry(descriptor, tuple(structures), notes=notes)


def _hp2() -> RegistryEntry:
    presentation = truncated_ring([("u", 4, 2)], total_dimension=8, top_monomial=(2,))
    u = presentation.generator("u")
    descriptor = atomic_manifold(
        "HP2",
        dimension=8,
        euler_characteristic=3,
        signature=1,
        cohomology=presentation,
        pontrjagin_classes=(2 * u, 7 * (u * u)),
        connectivity=3,
    )
    return RegistryEntry(
        descriptor,
        (),
        notes="standard-reference characteristic data; carries no candidate "
        "structures, but HP2 # HP2 # SphereProduct(2,2) is known to admit "
        "an almost complex structure on outside authority",
    )


@functools.lru_cache(maxsize=None)
def builtin(name: str, *params: int) -> RegistryEntry:
    """Construct (and cache) the registry entry for a builtin manifold."""
    if name not in _PARAM_COUNTS:
        raise UnknownManifold(
            f"unknown builtin manifold {name!r}; available: {', '.join(BUILTIN_NAMES)}"
        )
    expected = _PARAM_COUNTS[name]
    if len(params) != expected:
        raise UnknownManifold(
            f"{name} takes {expected} parameter(s), got {len(params)}"
        )
    if name == "CP":
        return _cp(*params)
    if name == "conjCP":
        return _conj_cp(*params)
    if name == "Sphere":
        return _sphere(*params)
    if name == "SphereProduct":
        return _sphere_product(*params)
    return _hp2()
