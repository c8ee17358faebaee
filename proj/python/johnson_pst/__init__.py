"""Exact construction of the Johnson association scheme and perfect state
transfer decisions for its classes and unions of classes, with a
continuous-time quantum-walk oracle."""

from johnson_pst._core import (
    __version__,
    antipodal_amplitude,
    automorphism_obstruction,
    binom,
    binom_mod_p,
    closed_form_eigenvalues,
    dense_walk_oracle,
    dominates,
    dual_eigenvalue,
    eigenvalue,
    enumerate_vertices,
    gcd_all,
    graph_edges,
    idempotent_entry,
    intersection_size,
    involution_classes,
    is_connected,
    multiplicity,
    ord2,
    parse_time,
    periodicity_check,
    predicted_connected,
    pst_report,
    scan_max_amplitude,
    scheme_info_report,
    scheme_summary,
    spectrum,
    transition_entry,
    validate_congruence_lemmas,
    verdict_single_class,
    verdict_union,
    verify_axioms,
)

__all__ = [
    "__version__",
    "antipodal_amplitude",
    "automorphism_obstruction",
    "binom",
    "binom_mod_p",
    "closed_form_eigenvalues",
    "dense_walk_oracle",
    "dominates",
    "dual_eigenvalue",
    "eigenvalue",
    "enumerate_vertices",
    "gcd_all",
    "graph_edges",
    "idempotent_entry",
    "intersection_size",
    "involution_classes",
    "is_connected",
    "multiplicity",
    "ord2",
    "parse_time",
    "periodicity_check",
    "predicted_connected",
    "pst_report",
    "scan_max_amplitude",
    "scheme_info_report",
    "scheme_summary",
    "spectrum",
    "transition_entry",
    "validate_congruence_lemmas",
    "verdict_single_class",
    "verdict_union",
    "verify_axioms",
]
