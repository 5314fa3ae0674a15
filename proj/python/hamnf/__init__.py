"""Exact Hamiltonian normal forms with semisymplectic symmetry."""

from ._hamnf import (
    HamnfError,
    Poly,
    SymmetryGroup,
    SymplecticForm,
    classify_matrix,
    complement_basis,
    equivariant_complement,
    hamiltonian_field,
    normal_form,
    poisson,
    quadratic_from_matrix,
    run_problem,
)

__all__ = [
    "HamnfError",
    "Poly",
    "SymmetryGroup",
    "SymplecticForm",
    "classify_matrix",
    "complement_basis",
    "equivariant_complement",
    "hamiltonian_field",
    "normal_form",
    "poisson",
    "quadratic_from_matrix",
    "run_problem",
]
