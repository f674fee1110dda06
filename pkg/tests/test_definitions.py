"""Input-file loading: manifolds, structures, moduli, error reporting."""

from __future__ import annotations

import pytest

from acsum.definitions import (
    DefinitionError,
    load_definitions,
    parse_polynomial,
    parse_structure_value,
)
from acsum.engine import Environment, VerdictStatus, decide
from acsum.registry import builtin
from acsum.ring import truncated_ring
from acsum.structures import HONEST, LineBundleAggregate, TrivialWithChern

WIDGET = """
# A fabricated 4-manifold with the characteristic data of CP(2).
[manifold Widget]
dimension = 4
chi = 3
tau = 1
generators = t:2:2
top_monomial = t^2
orientation_sign = +1
pontrjagin_classes = 3*t^2
connectivity = 1

[structure std on Widget]
value = std

[structure twist on Widget]
value = t + 2*conj(t)
"""

MODULI = """
[moduli]
2 = 4
4 = 2
"""


def test_load_manifold_section():
    defs = load_definitions([("widget.txt", WIDGET)])
    widget = defs.manifolds["Widget"]
    assert widget.dimension == 4
    assert widget.euler_characteristic == 3
    assert widget.signature == 1
    assert widget.connectivity == 1
    assert dict(widget.pontrjagin_numbers) == {"p1": 3}
    assert [raw.name for raw in defs.structures] == ["std", "twist"]


def test_load_moduli_section():
    defs = load_definitions([("moduli.txt", MODULI)])
    assert defs.moduli == {2: 4, 4: 2}


def test_environment_binds_structures_and_decides():
    defs = load_definitions([("widget.txt", WIDGET)])
    environment = Environment(defs)
    verdict = decide("Widget # conj(CP(2))", environment=environment)
    assert verdict.status is VerdictStatus.ADMITS
    assert verdict.certificate.assignment.names == ("std", "eta")


def test_user_aggregate_passes_obstruction_arithmetic():
    defs = load_definitions([("widget.txt", WIDGET)])
    environment = Environment(defs)
    # twist has total Chern class (1+t)(1-t)^2 with c2 = -1, so its
    # coefficient is (3 - (-1)) / 2 = 2 and 3 copies pad to zero.
    verdict = decide("3*Widget", environment=environment)
    assert verdict.status is VerdictStatus.ADMITS
    assert verdict.certificate.assignment.names == ("std", "std", "twist")
    assert verdict.certificate.coefficients == (0, 0, 2)


def test_structures_may_target_builtins():
    text = "[structure mg on SphereProduct(2,2)]\nvalue = trivial(c4=4)\n"
    defs = load_definitions([("mg.txt", text)])
    environment = Environment(defs)
    verdict = decide("SphereProduct(2,2) # conj(CP(4))", environment=environment)
    assert verdict.status is VerdictStatus.ADMITS
    assert verdict.certificate.assignment.names == ("mg", "eta")


def test_polynomial_parser():
    pres = truncated_ring([("x", 2, 4)], total_dimension=8, top_monomial=(4,))
    assert parse_polynomial("5*x^2", pres) == pres.element({(2,): 5})
    assert parse_polynomial("1 + x - 2*x^2", pres) == pres.element(
        {(0,): 1, (1,): 1, (2,): -2}
    )
    assert parse_polynomial("-x + x", pres).is_zero
    assert parse_polynomial("x*x*x", pres) == pres.element({(3,): 1})


def test_polynomial_parser_rejects_unknown_generator():
    pres = truncated_ring([("x", 2, 4)], total_dimension=8, top_monomial=(4,))
    with pytest.raises(DefinitionError):
        parse_polynomial("3*y", pres)


def test_polynomial_parser_rejects_truncated_exponent():
    pres = truncated_ring([("x", 2, 2)], total_dimension=4, top_monomial=(2,))
    with pytest.raises(DefinitionError):
        parse_polynomial("x^3", pres)


def test_structure_value_forms():
    descriptor = builtin("SphereProduct", 2, 2).descriptor
    assert parse_structure_value("std", base=descriptor) == HONEST
    assert parse_structure_value("trivial(c4=0)", base=descriptor) == TrivialWithChern(0)
    cp2 = builtin("CP", 2).descriptor
    aggregate = parse_structure_value("1*x + 2*conj(x)", base=cp2)
    assert isinstance(aggregate, LineBundleAggregate)
    assert [(s.multiplicity, s.conjugated) for s in aggregate.summands] == [
        (1, False),
        (2, True),
    ]


def test_structure_value_rejects_wrong_chern_index():
    descriptor = builtin("SphereProduct", 2, 2).descriptor
    with pytest.raises(DefinitionError):
        parse_structure_value("trivial(c3=0)", base=descriptor)


def test_structure_value_rejects_high_degree_generator():
    descriptor = builtin("HP2").descriptor
    with pytest.raises(DefinitionError):
        parse_structure_value("2*u", base=descriptor)


def test_missing_required_keys_are_reported():
    with pytest.raises(DefinitionError) as info:
        load_definitions([("bad.txt", "[manifold M]\ndimension = 4\n")])
    assert "missing" in str(info.value)


def test_bad_section_header_is_reported_with_line():
    with pytest.raises(DefinitionError) as info:
        load_definitions([("bad.txt", "\n[manifold]\n")])
    assert "bad.txt:2" in str(info.value)


def test_duplicate_manifold_rejected():
    text = WIDGET + "\n[manifold Widget]\ndimension = 4\nchi = 3\ntau = 1\ngenerators = t:2:2\ntop_monomial = t^2\n"
    with pytest.raises(DefinitionError):
        load_definitions([("widget.txt", text)])


def test_signature_constraint_is_enforced():
    text = (
        "[manifold Bad]\ndimension = 6\nchi = 4\ntau = 1\n"
        "generators = t:2:3\ntop_monomial = t^3\n"
    )
    with pytest.raises(DefinitionError):
        load_definitions([("bad.txt", text)])


def test_content_before_section_rejected():
    with pytest.raises(DefinitionError):
        load_definitions([("bad.txt", "chi = 3\n")])


def test_structure_target_errors_are_contextual():
    text = "[structure s on Nowhere]\nvalue = std\n"
    defs = load_definitions([("s.txt", text)])
    with pytest.raises(Exception) as info:
        Environment(defs)
    assert "Nowhere" in str(info.value)


def test_structure_target_must_be_a_single_manifold():
    text = "[structure s on 2*CP(4)]\nvalue = std\n"
    defs = load_definitions([("s.txt", text)])
    with pytest.raises(DefinitionError) as info:
        Environment(defs)
    assert "single" in str(info.value)
