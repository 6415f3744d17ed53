"""Braid normal forms, Hurwitz orbits, orbifold invariants, Temperley-Lieb
representations, and a braid gate compiler, backed by the C++ core."""

from ._braidforge import (
    DomainError,
    InputError,
    abelianize,
    boundary_braid,
    braid_eq,
    braid_normal_form,
    braid_permutation,
    cli,
    compile_gate,
    connected_sum,
    cover_report,
    density_probe,
    hurwitz_orbit,
    invariants,
    is_c_group,
    jones_rep,
    orbifold_quotient,
    projective_distance,
    rep_of_word,
    standard_hurwitz_orbit,
)

__all__ = [
    "DomainError",
    "InputError",
    "abelianize",
    "boundary_braid",
    "braid_eq",
    "braid_normal_form",
    "braid_permutation",
    "cli",
    "compile_gate",
    "connected_sum",
    "cover_report",
    "density_probe",
    "hurwitz_orbit",
    "invariants",
    "is_c_group",
    "jones_rep",
    "orbifold_quotient",
    "projective_distance",
    "rep_of_word",
    "standard_hurwitz_orbit",
]

__version__ = "0.1.0"
