"""Groebner bases and verification for the determinantal ideals I_1(XY)."""

from ._detgb import (  # noqa: F401
    Ideal,
    MonomialOrder,
    Polynomial,
    Ring,
    betti_J_graded,
    betti_J_totals,
    cm_report,
    colon,
    determinant,
    family_G,
    family_S,
    family_S_tilde,
    generators,
    hilbert_numerator_of,
    intersect,
    is_groebner,
    is_reduced,
    koszul_table,
    minor,
    northcott_table,
    predicted_table,
    reduce,
    reduced_gb,
    run_suite,
    s_polynomial,
    syzygy_phi,
    table_numerator,
)

__all__ = [name for name in dir() if not name.startswith("_")]
