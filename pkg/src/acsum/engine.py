"""Verdict pipeline: necessary congruences, then certificate search.

``decide`` evaluates a connected-sum expression in three stages:

1. the Euler/signature congruence chi = (-1)^n tau (mod 4), which every
   almost complex 4n-manifold satisfies, runs on the formal sum;
2. for (4m-1)-connected 8m-manifolds, the Pontrjagin-number condition
   4 p_{2m} - p_m^2 = 8 chi runs as well; any failure is a proof of
   nonexistence and yields NOT_ADMITS with the failed congruence as
   certificate;
3. otherwise candidate structure assignments are enumerated in
   lexicographic order; the first assignment whose combined obstruction
   coefficient vanishes yields ADMITS with a replayable certificate.

A nonvanishing coefficient is never evidence of nonexistence (structures
outside the search space may exist), so an exhausted or truncated search
returns UNKNOWN together with the coefficients that were observed.

The reported certificate is the lexicographically least vanishing
assignment, which makes ``decide`` a pure function of its inputs.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Union

from . import definitions, registry
from .expressions import Conj, Expression, ManifoldNode, ManifoldRef, parse, unparse
from .manifolds import (
    ManifoldDescriptor,
    connected_sum,
    partition_label,
    pontrjagin_numbers_of,
    reverse_orientation,
)
from .obstruction import (
    ObstructionCoefficient,
    StructureAssignment,
    obstruction_from_stable,
    sum_obstruction,
    vanishes,
)
from .structures import NamedStructure, TrivialWithChern

__all__ = [
    "AdmitsCertificate",
    "CheckOutcome",
    "CheckResult",
    "CongruenceCertificate",
    "DEFAULT_SEARCH_BOUND",
    "Environment",
    "ObstructionSurvey",
    "SearchSpace",
    "UnresolvedManifold",
    "Verdict",
    "VerdictStatus",
    "decide",
    "hirzebruch_check",
    "replay",
    "yang_8m_check",
]

DEFAULT_SEARCH_BOUND = 10**6


class UnresolvedManifold(ValueError):
    """A summand label matches neither a builtin nor a user definition."""


class CheckOutcome(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one necessary-condition check, with both sides recorded."""

    name: str
    outcome: CheckOutcome
    lhs: int | None = None
    rhs: int | None = None


class VerdictStatus(enum.Enum):
    ADMITS = "ADMITS"
    NOT_ADMITS = "NOT_ADMITS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class AdmitsCertificate:
    """A vanishing obstruction computation, replayable step by step."""

    assignment: StructureAssignment
    summand_labels: tuple[str, ...]
    coefficients: tuple[int, ...]
    total: ObstructionCoefficient


@dataclass(frozen=True)
class CongruenceCertificate:
    """A failed necessary condition, with both sides recorded."""

    check: CheckResult


@dataclass(frozen=True)
class ObstructionSurvey:
    """The coefficients observed by an inconclusive search."""

    coefficients: tuple[int, ...]
    assignments_examined: int
    exhausted: bool


Certificate = Union[AdmitsCertificate, CongruenceCertificate, ObstructionSurvey]


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    manifold: ManifoldDescriptor
    checks: tuple[CheckResult, ...]
    certificate: Certificate


@dataclass(frozen=True)
class SearchSpace:
    """Explicit per-summand candidate lists and an enumeration bound."""

    candidates: tuple[tuple[NamedStructure, ...], ...]
    bound: int = DEFAULT_SEARCH_BOUND

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError(f"search bound must be >= 1, got {self.bound}")


# -- necessary conditions --------------------------------------------------


def hirzebruch_check(manifold: ManifoldDescriptor) -> CheckResult:
    """chi = (-1)^n tau (mod 4), necessary in dimension 4n.

    Not applicable in dimensions 2 mod 4.  Both sides are reported
    unreduced; failure means they differ mod 4.
    """
    if manifold.dimension % 4:
        return CheckResult("hirzebruch", CheckOutcome.NOT_APPLICABLE)
    n = manifold.dimension // 4
    lhs = manifold.euler_characteristic
    rhs = manifold.signature if n % 2 == 0 else -manifold.signature
    outcome = CheckOutcome.PASS if (lhs - rhs) % 4 == 0 else CheckOutcome.FAIL
    return CheckResult("hirzebruch", outcome, lhs, rhs)


def yang_8m_check(manifold: ManifoldDescriptor, m: int) -> CheckResult:
    """4 p_{2m} - p_m^2 = 8 chi for (4m-1)-connected 8m-manifolds.

    Applies only when a connectivity of at least 4m-1 has been asserted;
    otherwise not applicable.  Pontrjagin numbers are additive under
    connected sums, so the check runs on formal sums as well.
    """
    if m < 1 or manifold.dimension != 8 * m:
        raise ValueError(
            f"{manifold.label} has dimension {manifold.dimension}, not {8 * m}"
        )
    if manifold.connectivity is None or manifold.connectivity < 4 * m - 1:
        return CheckResult("yang_8m", CheckOutcome.NOT_APPLICABLE)
    numbers = pontrjagin_numbers_of(manifold)
    p_2m = numbers.get(partition_label((2 * m,)), 0)
    p_m_squared = numbers.get(partition_label((m, m)), 0)
    lhs = 4 * p_2m - p_m_squared
    rhs = 8 * manifold.euler_characteristic
    outcome = CheckOutcome.PASS if lhs == rhs else CheckOutcome.FAIL
    return CheckResult("yang_8m", outcome, lhs, rhs)


def _run_checks(manifold: ManifoldDescriptor) -> tuple[CheckResult, ...]:
    checks = [hirzebruch_check(manifold)]
    if manifold.dimension % 8 == 0:
        checks.append(yang_8m_check(manifold, manifold.dimension // 8))
    else:
        checks.append(CheckResult("yang_8m", CheckOutcome.NOT_APPLICABLE))
    return tuple(checks)


# -- name resolution ---------------------------------------------------------


def _conjugate_entry(entry: registry.RegistryEntry) -> registry.RegistryEntry:
    # Only orientation-insensitive stubs survive reversal: a trivial
    # stable structure exists on either orientation of a stably
    # parallelizable base, but honest markers and aggregates do not
    # transfer in general.
    kept = tuple(
        named
        for named in entry.canonical_structures
        if isinstance(named.structure, TrivialWithChern)
        and named.structure.top_chern == 0
    )
    return registry.RegistryEntry(
        reverse_orientation(entry.descriptor),
        kept,
        notes=entry.notes,
    )


class Environment:
    """Resolves manifold references against builtins and user definitions.

    ``include_external`` admits registry stubs that rest on outside
    authority into the default candidate sets; they are skipped
    otherwise.  Structure sections from input files are bound to their
    target manifolds here.
    """

    def __init__(
        self,
        defs: definitions.Definitions | None = None,
        *,
        include_external: bool = False,
    ):
        self.include_external = include_external
        self._user: dict[str, registry.RegistryEntry] = {}
        self._extra: dict[str, list[NamedStructure]] = {}
        self.moduli: dict[int, int] = {}
        if defs is not None:
            for name, descriptor in defs.manifolds.items():
                self._user[name] = registry.RegistryEntry(
                    descriptor, (), notes="user-defined"
                )
            self.moduli.update(defs.moduli)
            for raw in defs.structures:
                self._bind_structure(raw)

    def _bind_structure(self, raw: definitions.RawStructure):
        try:
            expression = parse(raw.target)
        except Exception as err:
            raise definitions.DefinitionError(
                f"{raw.source}:{raw.line}: bad structure target {raw.target!r}: {err}"
            ) from None
        if len(expression.terms) != 1 or expression.terms[0].multiplicity != 1:
            raise definitions.DefinitionError(
                f"{raw.source}:{raw.line}: structure target must be a single "
                f"manifold, got {raw.target!r}"
            )
        entry = self.resolve_manifold(expression.terms[0].manifold)
        descriptor = entry.descriptor
        structure = definitions.parse_structure_value(
            raw.value,
            base=descriptor,
            source=raw.source,
            line=raw.line,
        )
        self._extra.setdefault(descriptor.label, []).append(
            NamedStructure(raw.name, structure)
        )

    def resolve_manifold(self, node: ManifoldNode) -> registry.RegistryEntry:
        if isinstance(node, Conj):
            inner = node.inner
            if isinstance(inner, Conj):
                return self.resolve_manifold(inner.inner)
            if (
                isinstance(inner, ManifoldRef)
                and inner.name == "CP"
                and inner.name not in self._user
            ):
                return registry.builtin("conjCP", *(inner.params or ()))
            return _conjugate_entry(self.resolve_manifold(inner))
        if node.params is None and node.name in self._user:
            return self._user[node.name]
        if node.name in registry.BUILTIN_NAMES:
            return registry.builtin(node.name, *(node.params or ()))
        raise UnresolvedManifold(
            f"unknown manifold {unparse(node)!r}; not a builtin "
            f"({', '.join(registry.BUILTIN_NAMES)}) or user definition"
        )

    def candidates_for(self, entry: registry.RegistryEntry) -> tuple[NamedStructure, ...]:
        named = [
            candidate
            for candidate in entry.canonical_structures
            if self.include_external or not candidate.external
        ]
        named.extend(self._extra.get(entry.descriptor.label, ()))
        return tuple(named)


def _resolve_expression(
    expression: Expression, environment: Environment
) -> tuple[list[ManifoldDescriptor], list[tuple[NamedStructure, ...]]]:
    summands: list[ManifoldDescriptor] = []
    candidates: list[tuple[NamedStructure, ...]] = []
    for term in expression.terms:
        entry = environment.resolve_manifold(term.manifold)
        per_summand = environment.candidates_for(entry)
        for _ in range(term.multiplicity):
            summands.append(entry.descriptor)
            candidates.append(per_summand)
    return summands, candidates


# -- the decision pipeline ---------------------------------------------------


def decide(
    expression: str | Expression,
    space: SearchSpace | None = None,
    *,
    environment: Environment | None = None,
    moduli: Mapping[int, int] | None = None,
    search_bound: int | None = None,
) -> Verdict:
    """Decide whether a connected sum admits an almost complex structure.

    ``space`` overrides the per-summand candidate structures (its arity
    must match the number of summands).  ``moduli`` maps half-dimensions
    n to the order of the sphere obstruction, when the caller wants
    vanishing mod that order to certify; by default only an exact zero
    does.  Deterministic: ties between vanishing assignments resolve to
    the lexicographically first under the given candidate ordering.
    """
    if isinstance(expression, str):
        expression = parse(expression)
    if environment is None:
        environment = Environment()
    summands, candidates = _resolve_expression(expression, environment)
    if space is not None:
        if len(space.candidates) != len(summands):
            raise ValueError(
                f"assignment arity mismatch: {len(space.candidates)} candidate "
                f"lists for {len(summands)} summands"
            )
        candidates = list(space.candidates)
        bound = space.bound
    else:
        bound = search_bound if search_bound is not None else DEFAULT_SEARCH_BOUND
        if bound < 1:
            raise ValueError(f"search bound must be >= 1, got {bound}")
    if moduli is None:
        moduli = environment.moduli

    manifold = connected_sum(summands)
    checks = _run_checks(manifold)
    for check in checks:
        if check.outcome is CheckOutcome.FAIL:
            return Verdict(
                VerdictStatus.NOT_ADMITS,
                manifold,
                checks,
                CongruenceCertificate(check),
            )

    half_dimension = manifold.dimension // 2
    modulus = moduli.get(half_dimension) if moduli else None
    alpha = len(summands)

    # Per-summand coefficients are precomputed once; an assignment's
    # total is then sum(k_i) - (alpha - 1), reduced mod the configured
    # order if any.
    tables: list[tuple[int, ...]] = []
    for summand, options in zip(summands, candidates):
        tables.append(
            tuple(
                obstruction_from_stable(
                    summand, named.structure, modulus=modulus
                ).k
                for named in options
            )
        )

    total_assignments = math.prod(len(options) for options in candidates)
    examined = 0
    observed: set[int] = set()
    correction = alpha - 1
    if total_assignments:
        index_ranges = [range(len(options)) for options in candidates]
        for selection in itertools.islice(itertools.product(*index_ranges), bound):
            examined += 1
            total = sum(table[i] for table, i in zip(tables, selection)) - correction
            if modulus is not None:
                total %= modulus
            if total == 0:
                chosen = tuple(
                    options[i] for options, i in zip(candidates, selection)
                )
                coefficients = tuple(
                    table[i] for table, i in zip(tables, selection)
                )
                certificate_total = sum_obstruction(
                    [
                        ObstructionCoefficient(k, half_dimension, modulus)
                        for k in coefficients
                    ]
                )
                assert vanishes(certificate_total)
                return Verdict(
                    VerdictStatus.ADMITS,
                    manifold,
                    checks,
                    AdmitsCertificate(
                        StructureAssignment(chosen),
                        tuple(s.label for s in summands),
                        coefficients,
                        certificate_total,
                    ),
                )
            observed.add(total)
    return Verdict(
        VerdictStatus.UNKNOWN,
        manifold,
        checks,
        ObstructionSurvey(
            tuple(sorted(observed)),
            examined,
            exhausted=examined == total_assignments,
        ),
    )


def replay(verdict: Verdict) -> bool:
    """Re-derive a verdict's certificate from first principles.

    For ADMITS the recorded coefficients are recombined and must vanish;
    for NOT_ADMITS the failed congruence is recomputed from the formal
    sum.  UNKNOWN verdicts certify nothing and replay trivially.
    """
    if verdict.status is VerdictStatus.ADMITS:
        certificate = verdict.certificate
        total = sum_obstruction(
            [
                ObstructionCoefficient(
                    k, certificate.total.half_dimension, certificate.total.modulus
                )
                for k in certificate.coefficients
            ]
        )
        return vanishes(total) and total == certificate.total
    if verdict.status is VerdictStatus.NOT_ADMITS:
        check = verdict.certificate.check
        if check.name == "hirzebruch":
            rerun = hirzebruch_check(verdict.manifold)
        elif check.name == "yang_8m":
            rerun = yang_8m_check(verdict.manifold, verdict.manifold.dimension // 8)
        else:
            return False
        return rerun == check and rerun.outcome is CheckOutcome.FAIL
    return True
