"""Exact character tables, McKay quivers and generalized Cartan matrices
for finite subgroups of SL3(C) given by explicit matrix generators."""

from __future__ import annotations

from .catalog import (
    CatalogError,
    GroupSpec,
    Profile,
    SpecError,
    abelian_table,
    all_specs,
    build_group,
    expected_adjacency,
    expected_order,
    expected_profile,
    generators,
    parse_spec,
)
from .chartab import (
    CharacterTable,
    ConjugacyClassSet,
    NonIntegralMultiplicity,
    conjugacy_classes,
    decompose_product,
    dixon_table,
    natural_character,
    tables_match_by_reps,
    verify_orthogonality,
)
from .exactnum import (
    ConductorMismatch,
    Cyclotomic,
    common_conductor,
    root,
    sqrt_constant,
)
from .matgroup import (
    FiniteMatrixGroup,
    OrderBoundExceeded,
    SquareMatrix,
    closure,
    to_common_conductor,
)
from .mckay import (
    NotSymmetric,
    PsdReport,
    Quiver,
    adjacency,
    char_poly,
    dual_transpose_check,
    eigenvector_check,
    export_dot,
    export_json,
    gen_cartan,
    kernel_delta,
    pre_cartan,
    psd_check,
    quiver_iso,
)
from .published import (
    CartanAudit,
    PrintedCartan,
    PrintedTable,
    audit_cartan,
    match_printed_table,
)

__version__ = "0.1.0"

__all__ = [
    "CartanAudit",
    "CatalogError",
    "CharacterTable",
    "ConductorMismatch",
    "ConjugacyClassSet",
    "Cyclotomic",
    "FiniteMatrixGroup",
    "GroupSpec",
    "NonIntegralMultiplicity",
    "NotSymmetric",
    "OrderBoundExceeded",
    "PrintedCartan",
    "PrintedTable",
    "Profile",
    "PsdReport",
    "Quiver",
    "SpecError",
    "SquareMatrix",
    "abelian_table",
    "adjacency",
    "all_specs",
    "audit_cartan",
    "build_group",
    "char_poly",
    "closure",
    "common_conductor",
    "conjugacy_classes",
    "decompose_product",
    "dixon_table",
    "dual_transpose_check",
    "eigenvector_check",
    "expected_adjacency",
    "expected_order",
    "expected_profile",
    "export_dot",
    "export_json",
    "gen_cartan",
    "generators",
    "kernel_delta",
    "match_printed_table",
    "natural_character",
    "parse_spec",
    "pre_cartan",
    "psd_check",
    "quiver_iso",
    "root",
    "sqrt_constant",
    "tables_match_by_reps",
    "to_common_conductor",
    "verify_orthogonality",
]
