"""Exact-arithmetic engine for almost complex structures on connected sums.

The package decides, with machine-checkable certificates, whether a
formal connected sum of even-dimensional manifolds admits an almost
complex structure:

* necessary congruences on Euler characteristic, signature and
  Pontrjagin numbers prove nonexistence;
* a search over stable-structure candidates whose combined top
  obstruction vanishes proves existence;
* anything else is reported UNKNOWN, never guessed.

All arithmetic is exact integer arithmetic in truncated graded
polynomial rings.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .ring import (
    DegreeError,
    Generator,
    PresentationMismatch,
    RingElement,
    RingPresentation,
    add,
    component,
    mul,
    power,
    truncated_ring,
)
from .manifolds import (
    DimensionMismatch,
    ManifoldDescriptor,
    MissingCohomology,
    atomic_manifold,
    connected_sum,
    kronecker_pair,
    partition_label,
    partitions,
    pontrjagin_numbers_of,
    reverse_orientation,
)
from .structures import (
    HONEST,
    BundleSummand,
    ChernDataUnavailable,
    HonestACS,
    LineBundleAggregate,
    NamedStructure,
    StableStructure,
    TrivialWithChern,
    conjugate_aggregate,
    realification_check,
    top_chern_number,
    total_chern,
)
from .obstruction import (
    ObstructionCoefficient,
    ParityError,
    StructureAssignment,
    obstruction_from_stable,
    sum_obstruction,
    vanishes,
)
from .registry import BUILTIN_NAMES, RegistryEntry, UnknownManifold, builtin
from .engine import (
    AdmitsCertificate,
    CheckOutcome,
    CheckResult,
    CongruenceCertificate,
    DEFAULT_SEARCH_BOUND,
    Environment,
    ObstructionSurvey,
    SearchSpace,
    UnresolvedManifold,
    Verdict,
    VerdictStatus,
    decide,
    hirzebruch_check,
    replay,
    yang_8m_check,
)
from .expressions import Conj, Expression, ExpressionError, ManifoldRef, Term, parse, unparse
from .definitions import DefinitionError, Definitions, load_definitions, parse_polynomial
from .report import Report, build_report, render_machine, render_text

__all__ = [
    "AdmitsCertificate",
    "BUILTIN_NAMES",
    "BundleSummand",
    "CheckOutcome",
    "CheckResult",
    "ChernDataUnavailable",
    "Conj",
    "CongruenceCertificate",
    "DEFAULT_SEARCH_BOUND",
    "DefinitionError",
    "Definitions",
    "DegreeError",
    "DimensionMismatch",
    "Environment",
    "Expression",
    "ExpressionError",
    "Generator",
    "HONEST",
    "HonestACS",
    "LineBundleAggregate",
    "ManifoldDescriptor",
    "ManifoldRef",
    "MissingCohomology",
    "NamedStructure",
    "ObstructionCoefficient",
    "ObstructionSurvey",
    "ParityError",
    "PresentationMismatch",
    "RegistryEntry",
    "Report",
    "RingElement",
    "RingPresentation",
    "SearchSpace",
    "StableStructure",
    "StructureAssignment",
    "Term",
    "TrivialWithChern",
    "UnknownManifold",
    "UnresolvedManifold",
    "Verdict",
    "VerdictStatus",
    "add",
    "atomic_manifold",
    "build_report",
    "builtin",
    "component",
    "conjugate_aggregate",
    "connected_sum",
    "decide",
    "hirzebruch_check",
    "kronecker_pair",
    "load_definitions",
    "mul",
    "obstruction_from_stable",
    "parse",
    "parse_polynomial",
    "partition_label",
    "partitions",
    "pontrjagin_numbers_of",
    "power",
    "realification_check",
    "render_machine",
    "render_text",
    "replay",
    "reverse_orientation",
    "sum_obstruction",
    "top_chern_number",
    "total_chern",
    "truncated_ring",
    "unparse",
    "vanishes",
    "yang_8m_check",
]
