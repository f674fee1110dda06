"""Stable structure candidates: total Chern classes and consistency checks."""

from __future__ import annotations

import pytest

from acsum.manifolds import reverse_orientation
from acsum.registry import builtin
from acsum.ring import mul, power
from acsum.structures import (
    HONEST,
    BundleSummand,
    ChernDataUnavailable,
    LineBundleAggregate,
    TrivialWithChern,
    conjugate_aggregate,
    realification_check,
    top_chern_number,
    total_chern,
)


def eta_of(name, *params):
    entry = builtin(name, *params)
    for named in entry.canonical_structures:
        if named.name == "eta":
            return named.structure
    raise AssertionError(f"no eta registered for {name}{params}")


def line_aggregate(descriptor, *summands):
    pres = descriptor.cohomology
    return LineBundleAggregate(
        base=descriptor,
        summands=tuple(
            BundleSummand(pres.generator("x"), mult, conjugated=conj)
            for mult, conj in summands
        ),
        label="test",
    )


# -- total_chern -----------------------------------------------------------------


def test_total_chern_of_projective_family():
    for n in (2, 4, 6):
        entry = builtin("CP", n)
        aggregate = eta_of("CP", n)
        pres = entry.descriptor.cohomology
        one, x = pres.one(), pres.generator("x")
        expected = mul(power(one + x, n - 1), power(one - x, 2))
        assert total_chern(aggregate) == expected


def test_total_chern_of_reversed_family():
    for n in (2, 3, 5):
        entry = builtin("conjCP", n)
        aggregate = eta_of("conjCP", n)
        pres = entry.descriptor.cohomology
        one, x = pres.one(), pres.generator("x")
        expected = mul(power(one + x, n), one - x)
        assert total_chern(aggregate) == expected


def test_total_chern_of_empty_aggregate_is_one():
    descriptor = builtin("SphereProduct", 2, 2).descriptor
    aggregate = LineBundleAggregate(base=descriptor, summands=(), label="trivial")
    assert total_chern(aggregate) == descriptor.cohomology.one()


def test_aggregate_rejects_wrong_degree_chern_class():
    descriptor = builtin("HP2").descriptor
    u = descriptor.cohomology.generator("u")  # degree 4
    with pytest.raises(ValueError):
        BundleSummand(u, 1)


# -- top_chern_number ----------------------------------------------------------


def test_top_chern_family_on_projective_spaces():
    for n in range(1, 11):
        entry = builtin("CP", 2 * n)
        assert top_chern_number(eta_of("CP", 2 * n), entry.descriptor) == 2 * n - 3


def test_top_chern_family_on_reversed_projective_spaces():
    for n in range(2, 11):
        entry = builtin("conjCP", n)
        assert top_chern_number(eta_of("conjCP", n), entry.descriptor) == n - 1


def test_top_chern_of_trivial_stub():
    descriptor = builtin("SphereProduct", 2, 2).descriptor
    assert top_chern_number(TrivialWithChern(0), descriptor) == 0
    aggregate = LineBundleAggregate(base=descriptor, summands=(), label="trivial")
    assert top_chern_number(aggregate, descriptor) == 0


def test_top_chern_of_honest_structure_is_unavailable():
    with pytest.raises(ChernDataUnavailable):
        top_chern_number(HONEST, builtin("CP", 2).descriptor)


def test_top_chern_flips_with_orientation():
    for n in (2, 4):
        entry = builtin("CP", n)
        aggregate = eta_of("CP", n)
        value = top_chern_number(aggregate, entry.descriptor)
        reversed_value = top_chern_number(
            aggregate, reverse_orientation(entry.descriptor)
        )
        assert reversed_value == -value


# -- realification check ---------------------------------------------------------


def test_realification_of_projective_aggregate():
    # c(eta) c(conj eta) = (1-x^2)^5 on CP(4), matching 1 - p1 + p2 of
    # the tangent bundle, both expanded in Z[x]/(x^5).
    entry = builtin("CP", 4)
    aggregate = line_aggregate(entry.descriptor, (3, False), (2, True))
    pres = entry.descriptor.cohomology
    lhs = mul(total_chern(aggregate), total_chern(conjugate_aggregate(aggregate)))
    x = pres.generator("x")
    assert lhs == power(pres.one() - x * x, 5)
    assert realification_check(aggregate, entry.descriptor)


def test_realification_of_trivial_aggregate_on_sphere_product():
    descriptor = builtin("SphereProduct", 2, 2).descriptor
    aggregate = LineBundleAggregate(base=descriptor, summands=(), label="trivial")
    assert realification_check(aggregate, descriptor)


def test_realification_rejects_wrong_multiplicity():
    # A single hyperplane bundle on CP(2): (1-x^2) vs (1-x^2)^3 truncated.
    entry = builtin("CP", 2)
    aggregate = line_aggregate(entry.descriptor, (1, False))
    assert not realification_check(aggregate, entry.descriptor)


def test_realification_invariant_under_conjugation():
    for name, params in (("CP", (2,)), ("CP", (4,)), ("conjCP", (3,))):
        entry = builtin(name, *params)
        aggregate = eta_of(name, *params)
        assert realification_check(aggregate, entry.descriptor)
        assert realification_check(conjugate_aggregate(aggregate), entry.descriptor)


def test_conjugation_negates_generators():
    entry = builtin("CP", 4)
    aggregate = eta_of("CP", 4)
    pres = entry.descriptor.cohomology
    one, x = pres.one(), pres.generator("x")
    # Full conjugation swaps the roles of x and -x in the total class.
    expected = mul(power(one - x, 3), power(one + x, 2))
    assert total_chern(conjugate_aggregate(aggregate)) == expected
