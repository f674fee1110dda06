"""Loader for the line-oriented manifold/structure/moduli input files.

The format is plain text with ``#`` comments and three section kinds::

    [manifold Widget]
    dimension = 4
    chi = 3
    tau = 1
    generators = t:2:2            # name:degree:truncation, comma-separated
    top_monomial = t^2
    orientation_sign = +1         # optional, default +1
    pontrjagin_classes = 3*t^2    # optional comma-separated polynomials
    connectivity = 1              # optional

    [structure twist on Widget]
    value = t + 2*conj(t)         # or: std, or: trivial(c2=0)

    [moduli]
    2 = 4                         # order of the sphere obstruction at n=2

Polynomials are written in the generators of the section's manifold,
with integer coefficients, ``*`` for products and ``^`` for powers.
Structure values bind to their target manifold when an Environment is
built, so a structure section may target a manifold from another file
or a builtin such as ``SphereProduct(2,2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .manifolds import ManifoldDescriptor, atomic_manifold
from .ring import RingElement, RingPresentation, truncated_ring
from .structures import (
    HONEST,
    BundleSummand,
    LineBundleAggregate,
    StableStructure,
    TrivialWithChern,
)

__all__ = [
    "DefinitionError",
    "Definitions",
    "RawStructure",
    "load_definitions",
    "parse_polynomial",
    "parse_structure_value",
]


class DefinitionError(ValueError):
    """Malformed input file content, reported with file and line."""


@dataclass(frozen=True)
class RawStructure:
    """A structure section before its target manifold is resolved."""

    name: str
    target: str
    value: str
    source: str
    line: int


@dataclass
class Definitions:
    """Everything collected from a batch of input files."""

    manifolds: dict[str, ManifoldDescriptor] = field(default_factory=dict)
    structures: tuple[RawStructure, ...] = ()
    moduli: dict[int, int] = field(default_factory=dict)


# -- tiny polynomial grammar ---------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()=]))")


def _poly_tokens(text: str, where: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            remainder = text[pos:].strip()
            if not remainder:
                break
            raise DefinitionError(f"{where}: cannot read {remainder!r}")
        pos = match.end()
        number, name, symbol = match.groups()
        if number is not None:
            tokens.append(("INT", number))
        elif name is not None:
            tokens.append(("NAME", name))
        else:
            tokens.append(("SYM", symbol))
    tokens.append(("END", ""))
    return tokens


class _PolyParser:
    """poly := [sign] term (sign term)*; term := INT ['*' mono] | mono;
    mono := factor ('*' factor)*; factor := NAME ['^' INT]."""

    def __init__(self, text: str, presentation: RingPresentation, where: str):
        self.tokens = _poly_tokens(text, where)
        self.pos = 0
        self.presentation = presentation
        self.where = where

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, message: str):
        raise DefinitionError(f"{self.where}: {message}")

    def parse(self) -> RingElement:
        result = self.presentation.zero()
        sign = 1
        kind, text = self.peek()
        if kind == "SYM" and text in "+-":
            self.take()
            sign = -1 if text == "-" else 1
        result = result + self.parse_term(sign)
        while True:
            kind, text = self.peek()
            if kind == "END":
                return result
            if kind == "SYM" and text in "+-":
                self.take()
                result = result + self.parse_term(-1 if text == "-" else 1)
            else:
                self.fail(f"expected '+' or '-' before {text!r}")

    def parse_term(self, sign: int) -> RingElement:
        kind, text = self.peek()
        coefficient = sign
        if kind == "INT":
            self.take()
            coefficient = sign * int(text)
            kind, text = self.peek()
            if kind == "SYM" and text == "*":
                self.take()
            else:
                return self.presentation.scalar(coefficient)
        exponents = [0] * len(self.presentation.generators)
        while True:
            name_kind, name = self.take()
            if name_kind != "NAME":
                self.fail(f"expected a generator name, got {name!r}")
            index = self._generator_index(name)
            power = 1
            kind, text = self.peek()
            if kind == "SYM" and text == "^":
                self.take()
                int_kind, int_text = self.take()
                if int_kind != "INT":
                    self.fail(f"expected an exponent after '^', got {int_text!r}")
                power = int(int_text)
            exponents[index] += power
            kind, text = self.peek()
            if kind == "SYM" and text == "*":
                self.take()
                continue
            break
        try:
            return self.presentation.element({tuple(exponents): coefficient})
        except ValueError as err:
            self.fail(str(err))

    def _generator_index(self, name: str) -> int:
        for i, generator in enumerate(self.presentation.generators):
            if generator.name == name:
                return i
        self.fail(
            f"unknown generator {name!r}; this ring has "
            f"{', '.join(g.name for g in self.presentation.generators)}"
        )


def parse_polynomial(
    text: str, presentation: RingPresentation, *, where: str = "<polynomial>"
) -> RingElement:
    """Parse an integer polynomial in the presentation's generators."""
    return _PolyParser(text, presentation, where).parse()


def _parse_bare_monomial(
    text: str, names: Sequence[str], where: str
) -> tuple[int, ...]:
    """Parse ``x^2*y`` into an exponent vector over the given names."""
    exponents = [0] * len(names)
    tokens = _poly_tokens(text, where)
    pos = 0

    def take():
        nonlocal pos
        token = tokens[pos]
        pos += 1
        return token

    while True:
        kind, name = take()
        if kind != "NAME":
            raise DefinitionError(
                f"{where}: expected a generator name in monomial {text!r}"
            )
        if name not in names:
            raise DefinitionError(
                f"{where}: unknown generator {name!r}; this ring has "
                f"{', '.join(names)}"
            )
        power = 1
        if tokens[pos] == ("SYM", "^"):
            take()
            int_kind, int_text = take()
            if int_kind != "INT":
                raise DefinitionError(f"{where}: expected an exponent after '^'")
            power = int(int_text)
        exponents[names.index(name)] += power
        if tokens[pos] == ("SYM", "*"):
            take()
            continue
        if tokens[pos][0] == "END":
            return tuple(exponents)
        raise DefinitionError(
            f"{where}: unexpected {tokens[pos][1]!r} in monomial {text!r}"
        )


# -- structure values ----------------------------------------------------------

_TRIVIAL_RE = re.compile(r"trivial\(\s*c(\d+)\s*=\s*(-?\d+)\s*\)")
_BUNDLE_TERM_RE = re.compile(
    r"(?:(\d+)\s*\*\s*)?(?:(conj)\s*\(\s*([A-Za-z_][A-Za-z_0-9]*)\s*\)"
    r"|([A-Za-z_][A-Za-z_0-9]*))"
)


def parse_structure_value(
    text: str,
    *,
    base: ManifoldDescriptor,
    source: str = "<structure>",
    line: int = 0,
) -> StableStructure:
    """Parse ``std``, ``trivial(cN=K)`` or a line-bundle expression."""
    where = f"{source}:{line}"
    value = text.strip()
    if value == "std":
        return HONEST
    match = _TRIVIAL_RE.fullmatch(value)
    if match:
        index, top_chern = int(match.group(1)), int(match.group(2))
        if index != base.dimension // 2:
            raise DefinitionError(
                f"{where}: trivial(c{index}=...) does not match "
                f"{base.label} of dimension {base.dimension}; expected "
                f"c{base.dimension // 2}"
            )
        return TrivialWithChern(top_chern)
    if base.cohomology is None:
        raise DefinitionError(
            f"{where}: {base.label} has no cohomology presentation, so only "
            f"'std' or 'trivial(cN=K)' structures can be declared on it"
        )
    summands = []
    for piece in value.split("+"):
        piece = piece.strip()
        match = _BUNDLE_TERM_RE.fullmatch(piece)
        if not match:
            raise DefinitionError(
                f"{where}: cannot read bundle summand {piece!r}; expected "
                f"forms like '3*x', 'x' or '2*conj(x)'"
            )
        multiplicity_text, conj, conj_name, plain_name = match.groups()
        multiplicity = int(multiplicity_text) if multiplicity_text else 1
        name = conj_name if conj else plain_name
        try:
            first_chern = base.cohomology.generator(name)
        except ValueError as err:
            raise DefinitionError(f"{where}: {err}") from None
        if not first_chern.is_homogeneous(2):
            raise DefinitionError(
                f"{where}: generator {name!r} has degree != 2 and cannot be "
                f"the first Chern class of a line bundle"
            )
        try:
            summands.append(
                BundleSummand(first_chern, multiplicity, conjugated=bool(conj))
            )
        except ValueError as err:
            raise DefinitionError(f"{where}: {err}") from None
    return LineBundleAggregate(base=base, summands=tuple(summands), label=value)


# -- the sectioned file format ---------------------------------------------


def _strip_comment(line: str) -> str:
    index = line.find("#")
    return line if index < 0 else line[:index]


def _parse_header(text: str, source: str, line_number: int) -> tuple[str, ...]:
    body = text.strip()[1:-1].strip()
    parts = body.split()
    if parts and parts[0] == "manifold" and len(parts) == 2:
        if not parts[1].isidentifier():
            raise DefinitionError(
                f"{source}:{line_number}: manifold name {parts[1]!r} must be "
                f"an identifier"
            )
        return ("manifold", parts[1])
    if parts and parts[0] == "structure" and len(parts) == 4 and parts[2] == "on":
        return ("structure", parts[1], parts[3])
    if parts == ["moduli"]:
        return ("moduli",)
    raise DefinitionError(
        f"{source}:{line_number}: bad section header {text.strip()!r}; expected "
        f"[manifold NAME], [structure NAME on TARGET] or [moduli]"
    )


_MANIFOLD_KEYS = {
    "dimension",
    "chi",
    "tau",
    "generators",
    "top_monomial",
    "orientation_sign",
    "pontrjagin_classes",
    "connectivity",
}
_REQUIRED_MANIFOLD_KEYS = {"dimension", "chi", "tau", "generators", "top_monomial"}


def _parse_int(value: str, where: str, key: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise DefinitionError(f"{where}: {key} must be an integer, got {value!r}") from None


def _build_manifold(
    name: str, entries: dict[str, tuple[str, int]], source: str
) -> ManifoldDescriptor:
    def where(key):
        return f"{source}:{entries[key][1]}"

    missing = _REQUIRED_MANIFOLD_KEYS - entries.keys()
    if missing:
        raise DefinitionError(
            f"{source}: [manifold {name}] is missing {', '.join(sorted(missing))}"
        )
    unknown = entries.keys() - _MANIFOLD_KEYS
    if unknown:
        raise DefinitionError(
            f"{source}: [manifold {name}] has unknown keys "
            f"{', '.join(sorted(unknown))}"
        )
    dimension = _parse_int(entries["dimension"][0], where("dimension"), "dimension")
    chi = _parse_int(entries["chi"][0], where("chi"), "chi")
    tau = _parse_int(entries["tau"][0], where("tau"), "tau")

    generators = []
    for item in entries["generators"][0].split(","):
        parts = [p.strip() for p in item.strip().split(":")]
        if len(parts) != 3:
            raise DefinitionError(
                f"{where('generators')}: expected name:degree:truncation, got "
                f"{item.strip()!r}"
            )
        gen_name = parts[0]
        degree = _parse_int(parts[1], where("generators"), "generator degree")
        truncation = _parse_int(parts[2], where("generators"), "generator truncation")
        generators.append((gen_name, degree, truncation))

    orientation_sign = 1
    if "orientation_sign" in entries:
        raw = entries["orientation_sign"][0].strip()
        if raw in ("+1", "1"):
            orientation_sign = 1
        elif raw == "-1":
            orientation_sign = -1
        else:
            raise DefinitionError(
                f"{where('orientation_sign')}: orientation_sign must be +1 or -1"
            )

    connectivity = None
    if "connectivity" in entries:
        connectivity = _parse_int(
            entries["connectivity"][0], where("connectivity"), "connectivity"
        )

    top = _parse_bare_monomial(
        entries["top_monomial"][0],
        [gen_name for gen_name, _, _ in generators],
        where("top_monomial"),
    )
    try:
        presentation = truncated_ring(
            generators, total_dimension=dimension, top_monomial=top
        )
    except ValueError as err:
        raise DefinitionError(f"{source}: [manifold {name}]: {err}") from None

    classes = []
    if "pontrjagin_classes" in entries:
        raw = entries["pontrjagin_classes"][0].strip()
        if raw:
            for piece in raw.split(","):
                classes.append(
                    parse_polynomial(
                        piece.strip(), presentation, where=where("pontrjagin_classes")
                    )
                )
    try:
        return atomic_manifold(
            name,
            dimension=dimension,
            euler_characteristic=chi,
            signature=tau,
            cohomology=presentation,
            orientation_sign=orientation_sign,
            pontrjagin_classes=tuple(classes),
            connectivity=connectivity,
        )
    except ValueError as err:
        raise DefinitionError(f"{source}: [manifold {name}]: {err}") from None


def load_definitions(sources: Iterable[tuple[str, str]]) -> Definitions:
    """Parse a batch of (source name, text) input files.

    Manifold and moduli sections are fully resolved; structure sections
    are collected raw and bound when an Environment is built, so they
    may target manifolds from any file in the batch or builtins.
    """
    defs = Definitions()
    structures: list[RawStructure] = []
    for source, text in sources:
        section: tuple[str, ...] | None = None
        section_line = 0
        entries: dict[str, tuple[str, int]] = {}

        def finish():
            if section is None:
                if entries:
                    first_line = min(line for _, line in entries.values())
                    raise DefinitionError(
                        f"{source}:{first_line}: content before any section header"
                    )
                return
            if section[0] == "manifold":
                name = section[1]
                if name in defs.manifolds:
                    raise DefinitionError(
                        f"{source}:{section_line}: duplicate manifold {name!r}"
                    )
                defs.manifolds[name] = _build_manifold(name, entries, source)
            elif section[0] == "structure":
                if set(entries) != {"value"}:
                    raise DefinitionError(
                        f"{source}:{section_line}: a structure section needs "
                        f"exactly one 'value' key"
                    )
                structures.append(
                    RawStructure(
                        name=section[1],
                        target=section[2],
                        value=entries["value"][0],
                        source=source,
                        line=entries["value"][1],
                    )
                )
            else:  # moduli
                for key, (value, line_number) in entries.items():
                    n = _parse_int(key, f"{source}:{line_number}", "half-dimension")
                    order = _parse_int(value, f"{source}:{line_number}", "order")
                    if n < 1 or order < 1:
                        raise DefinitionError(
                            f"{source}:{line_number}: moduli entries must be "
                            f"positive integers"
                        )
                    defs.moduli[n] = order

        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line = _strip_comment(raw_line).strip()
            if not line:
                continue
            if line.startswith("[") and line.endswith("]"):
                finish()
                section = _parse_header(line, source, line_number)
                section_line = line_number
                entries = {}
                continue
            if "=" not in line:
                raise DefinitionError(
                    f"{source}:{line_number}: expected 'key = value', got {line!r}"
                )
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key in entries:
                raise DefinitionError(
                    f"{source}:{line_number}: duplicate key {key!r}"
                )
            entries[key] = (value, line_number)
        finish()
    defs.structures = tuple(structures)
    return defs
