"""Exact spectral toolkit for structured digraph families.

Builds the chorded-cycle, fan and wheel digraph families, computes
characteristic polynomials by two independent exact routes (trace
recursion and signed linear-subgraph enumeration), minimal polynomials,
non-derogatory certificates, irreducibility criteria, and primitive
exponents, and cross-verifies every closed form in a reproducible
report.  All arithmetic is exact (Python ints and rationals).
"""

from .digraph import (
    Digraph,
    IndexOutOfRange,
    NotSimple,
    NotStronglyConnected,
    ParallelNonLoopArc,
    WalkCountMatrix,
    build_digraph,
    complement,
    cycle_gcd,
    is_strongly_connected,
    walk_count,
)
from .exponents import (
    ExponentResult,
    alternating_fan_walks_length9,
    check_walks,
    exponent,
    is_primitive,
    verify_walk_list,
)
from .families import (
    FAMILY_NAMES,
    TABLE_NAMES,
    FamilySpec,
    InvalidParameter,
    build_family,
    closed_form_charpoly,
    complement_closed_form,
    family_spec_from_json_dict,
    parse_family_spec,
    table_specs,
)
from .polynomial import (
    BothZeroMod2,
    BrauerForm,
    InexactDivision,
    IntPolynomial,
    NotMonic,
    brauer_form,
    cyclotomic,
    find_monic_factor,
    gcd_over_f2,
    gcd_over_q,
    geometric_sum,
    is_squarefree,
    perron_irreducible,
    perron_margin,
)
from .spectra import (
    Ldsg,
    TooLargeForEnumeration,
    TooLargeForSearch,
    TriangularCertificate,
    charpoly_exact,
    charpoly_ldsg,
    enumerate_ldsgs,
    is_non_derogatory,
    minimal_polynomial,
    triangular_certificate,
)
from .verify import (
    ReportRow,
    VerificationReport,
    build_report,
    distinctness_check,
    expected_exponent,
    expected_no_walk_pair,
)

__version__ = "0.1.0"

__all__ = [
    "BothZeroMod2",
    "BrauerForm",
    "Digraph",
    "ExponentResult",
    "FAMILY_NAMES",
    "FamilySpec",
    "IndexOutOfRange",
    "InexactDivision",
    "IntPolynomial",
    "InvalidParameter",
    "Ldsg",
    "NotMonic",
    "NotSimple",
    "NotStronglyConnected",
    "ParallelNonLoopArc",
    "ReportRow",
    "TABLE_NAMES",
    "TooLargeForEnumeration",
    "TooLargeForSearch",
    "TriangularCertificate",
    "VerificationReport",
    "WalkCountMatrix",
    "alternating_fan_walks_length9",
    "brauer_form",
    "build_digraph",
    "build_family",
    "build_report",
    "charpoly_exact",
    "charpoly_ldsg",
    "check_walks",
    "closed_form_charpoly",
    "complement",
    "complement_closed_form",
    "cycle_gcd",
    "cyclotomic",
    "distinctness_check",
    "enumerate_ldsgs",
    "expected_exponent",
    "expected_no_walk_pair",
    "exponent",
    "family_spec_from_json_dict",
    "find_monic_factor",
    "gcd_over_f2",
    "gcd_over_q",
    "geometric_sum",
    "is_non_derogatory",
    "is_primitive",
    "is_squarefree",
    "is_strongly_connected",
    "minimal_polynomial",
    "parse_family_spec",
    "perron_irreducible",
    "perron_margin",
    "table_specs",
    "triangular_certificate",
    "verify_walk_list",
    "walk_count",
]
