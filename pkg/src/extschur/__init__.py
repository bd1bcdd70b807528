"""Exact combinatorics of extended Schur functions and the 0-Hecke
modules built on standard extended tableaux.

Everything is computed in exact integer or rational arithmetic: basis
conversions between the monomial and fundamental quasisymmetric bases,
extended Schur expansions indexed by standard extended tableaux, the
operator action on tableau bases with its filtration and composition
series, and the commutant computation certifying indecomposability.
"""

from .compositions import (
    Composition,
    DescentSubset,
    composition_of_subset,
    compositions_of,
    descent_subset,
    format_composition,
    is_partition,
    parse_composition,
    refinements,
    refines,
)
from .hecke_action import (
    ActionResult,
    Filtration,
    Fixed,
    RelationReport,
    RelationViolation,
    Swapped,
    Zero,
    apply_word,
    filtration,
    generation_path,
    pi_full,
    pi_quotient,
    preceq,
    verify_relations,
)
from .module_analysis import (
    EndomorphismSpace,
    Inconclusive,
    Indecomposable,
    ModuleMatrices,
    analysis_report,
    characteristic,
    commutant_basis,
    composition_factors,
    is_indecomposable,
    matrices,
    verify_submodule_closure,
)
from .qsym import (
    KMatrix,
    QSymElement,
    extended_schur_in_F,
    extended_schur_in_M,
    fundamental,
    fundamental_to_monomial,
    hook_length_count,
    k_matrix,
    monomial,
    monomial_to_fundamental,
    ribbon_in_shin,
    schur_in_F,
    specialize,
)
from .tableaux import (
    Box,
    RowSumVector,
    Tableau,
    descent_composition,
    enumerate_set,
    enumerate_srit,
    is_standard_extended,
    reading_word,
    row_sum_vector,
    super_standard,
    swap_entries,
)

__version__ = "0.1.0"

__all__ = [
    "ActionResult",
    "Box",
    "Composition",
    "DescentSubset",
    "EndomorphismSpace",
    "Filtration",
    "Fixed",
    "Inconclusive",
    "Indecomposable",
    "KMatrix",
    "ModuleMatrices",
    "QSymElement",
    "RelationReport",
    "RelationViolation",
    "RowSumVector",
    "Swapped",
    "Tableau",
    "Zero",
    "analysis_report",
    "apply_word",
    "characteristic",
    "commutant_basis",
    "composition_factors",
    "composition_of_subset",
    "compositions_of",
    "descent_composition",
    "descent_subset",
    "enumerate_set",
    "enumerate_srit",
    "extended_schur_in_F",
    "extended_schur_in_M",
    "filtration",
    "format_composition",
    "fundamental",
    "fundamental_to_monomial",
    "generation_path",
    "hook_length_count",
    "is_indecomposable",
    "is_partition",
    "is_standard_extended",
    "k_matrix",
    "matrices",
    "monomial",
    "monomial_to_fundamental",
    "parse_composition",
    "pi_full",
    "pi_quotient",
    "preceq",
    "reading_word",
    "refinements",
    "refines",
    "ribbon_in_shin",
    "row_sum_vector",
    "schur_in_F",
    "specialize",
    "super_standard",
    "swap_entries",
    "verify_relations",
    "verify_submodule_closure",
]
