"""Exact graded weight multiplicities, affine characters and quiver
Coulomb-branch series (thin wrapper over the C++ core)."""

from _satake import (
    affine_multiplicity,
    graded_section_multiplicity,
    kostka,
    monopole_hilbert_series,
    positive_roots,
    rank,
    run_job,
    sym_power_orbifold_series,
    tensor_multiplicity,
    verify_eq1,
    weight_multiplicity,
    weyl_dimension,
)

__all__ = [
    "affine_multiplicity",
    "graded_section_multiplicity",
    "kostka",
    "monopole_hilbert_series",
    "positive_roots",
    "rank",
    "run_job",
    "sym_power_orbifold_series",
    "tensor_multiplicity",
    "verify_eq1",
    "weight_multiplicity",
    "weyl_dimension",
]
