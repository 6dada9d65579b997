"""Exact toolkit for induced cycles in Levi graphs of line arrangements.

The package models a line arrangement purely by its point-line incidences,
builds the bipartite Levi graph, and answers induced-cycle questions
(existence at a given length, longest, full spectrum) by exhaustive
canonical search, so every "absent" is a completed enumeration and every
"found" carries an independently checkable witness.  Known coordinate
families come with exact cyclotomic realizations for cross-checking, and a
claims layer turns structural theorems into runnable verdicts.
"""

from .arrangement import (
    Arrangement,
    ArrangementError,
    MultiplicityProfile,
    ValidationReport,
    arrangement_from_json,
    arrangement_to_json,
    modular_points,
    multiplicity_profile,
    relabeled,
    subarrangement,
    validate_arrangement,
)
from .claims import (
    CONFIRMED,
    NAMED_CLAIMS,
    NOT_APPLICABLE,
    REFUTED,
    VERDICT_UNKNOWN,
    ClaimReport,
    Hypothesis,
    UnknownClaim,
    all_checkers,
    verify_c6,
    verify_c8,
    verify_c10,
    verify_named_claim,
    verify_no_2k_supersolvable,
    verify_t3_bounds,
    verify_tq_bounds,
)
from .cycles import (
    ABSENT,
    FOUND,
    NO_INDUCED_CYCLE,
    UNKNOWN,
    BadLength,
    CycleSpectrum,
    InducedCycleWitness,
    LongestResult,
    SearchResult,
    exists_cycle,
    longest_cycle,
    spectrum,
    validate_witness,
)
from .exact_field import CycloNumber, cyclotomic_polynomial, format_scalar, parse_scalar
from .families import (
    FAMILIES,
    BadParam,
    a_w_k,
    build_family,
    ceva,
    generic,
    hesse,
    mu4,
    near_pencil,
    nine_three,
    supersolvable_mu3,
    ten_line,
    two_modular,
)
from .levi import (
    LeviGraph,
    build_levi,
    export_dot,
    export_json,
    girth,
    levi_from_json,
    recover_arrangement,
    subdivide,
)
from .oracle import (
    TooLarge,
    circumference,
    oracle_induced_cycle_lengths,
    oracle_longest_induced_cycle,
)
from .projective import (
    GeometryError,
    ProjLine,
    ProjPoint,
    arrangement_from_lines,
    incident,
    line_through,
    meet,
)

__version__ = "1.0.0"

__all__ = [
    "Arrangement",
    "ArrangementError",
    "MultiplicityProfile",
    "ValidationReport",
    "arrangement_from_json",
    "arrangement_to_json",
    "modular_points",
    "multiplicity_profile",
    "relabeled",
    "subarrangement",
    "validate_arrangement",
    "CONFIRMED",
    "NAMED_CLAIMS",
    "NOT_APPLICABLE",
    "REFUTED",
    "VERDICT_UNKNOWN",
    "ClaimReport",
    "Hypothesis",
    "UnknownClaim",
    "all_checkers",
    "verify_c6",
    "verify_c8",
    "verify_c10",
    "verify_named_claim",
    "verify_no_2k_supersolvable",
    "verify_t3_bounds",
    "verify_tq_bounds",
    "ABSENT",
    "FOUND",
    "NO_INDUCED_CYCLE",
    "UNKNOWN",
    "BadLength",
    "CycleSpectrum",
    "InducedCycleWitness",
    "LongestResult",
    "SearchResult",
    "exists_cycle",
    "longest_cycle",
    "spectrum",
    "validate_witness",
    "CycloNumber",
    "cyclotomic_polynomial",
    "format_scalar",
    "parse_scalar",
    "FAMILIES",
    "BadParam",
    "a_w_k",
    "build_family",
    "ceva",
    "generic",
    "hesse",
    "mu4",
    "near_pencil",
    "nine_three",
    "supersolvable_mu3",
    "ten_line",
    "two_modular",
    "LeviGraph",
    "build_levi",
    "export_dot",
    "export_json",
    "girth",
    "levi_from_json",
    "recover_arrangement",
    "subdivide",
    "TooLarge",
    "circumference",
    "oracle_induced_cycle_lengths",
    "oracle_longest_induced_cycle",
    "GeometryError",
    "ProjLine",
    "ProjPoint",
    "arrangement_from_lines",
    "incident",
    "line_through",
    "meet",
    "__version__",
]
