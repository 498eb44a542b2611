"""Identity suites evaluated exactly on deterministic sample grids."""

from axiom_checks.courant_checks import check_courant, check_generalized_courant, check_square_lemmas
from axiom_checks.leibniz import check_leibniz, check_loday, check_symmetric, s1_residual, s2_residual, s2b_residual
from axiom_checks.modules import check_module
from axiom_checks.report import (
    CheckReport,
    Failure,
    all_pass,
    find_report,
    report_from_defects,
    run_identity,
    vacuous_count,
)
from axiom_checks.sampling import DEFAULT_SAMPLE_LIMIT, SampleGrid, Samples, Slot, element_slot, scalar_slot, value_slot

__all__ = [
    "CheckReport",
    "DEFAULT_SAMPLE_LIMIT",
    "Failure",
    "SampleGrid",
    "Samples",
    "Slot",
    "all_pass",
    "check_courant",
    "check_generalized_courant",
    "check_leibniz",
    "check_loday",
    "check_module",
    "check_square_lemmas",
    "check_symmetric",
    "element_slot",
    "find_report",
    "report_from_defects",
    "run_identity",
    "s1_residual",
    "s2_residual",
    "s2b_residual",
    "scalar_slot",
    "vacuous_count",
    "value_slot",
]
