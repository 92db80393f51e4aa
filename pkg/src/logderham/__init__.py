"""Twisted logarithmic de Rham cohomology of central hyperplane arrangements."""

__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    LinearForm,
    PolyForm,
    Polynomial,
    euler_contract,
    exact_div_linear,
    exterior_derivative,
    poly_arith,
    reduce_mod_linear,
    wedge,
)
from .arrangement import Arrangement, Flat, Lattice, dense_flags, flats, intersection_lattice, mobius_poincare, validate
from .bsideals import CandidateComponent, Factorization, candidates, make_factorization, univariate_roots
from .derham import (
    ComplexReport,
    contraction_matrix,
    lie_identity_check,
    nabla_matrix,
    subcomplex_cohomology,
    twisted_betti,
)
from .linalg import RatMatrix, kernel_basis, rank, solve
from .logforms import GradedBasis, graded_basis, hilbert_dims
from .weights import ConditionReport, WeightVector, check_conditions, edge_residue, normalize, parse_weights

__all__ = [
    "Arrangement", "CandidateComponent", "ComplexReport", "ConditionReport", "Factorization", "Flat",
    "GradedBasis", "Lattice", "LinearForm", "PolyForm", "Polynomial", "RatMatrix", "WeightVector",
    "candidates", "check_conditions", "contraction_matrix", "dense_flags", "edge_residue",
    "euler_contract", "exact_div_linear", "exterior_derivative", "flats", "graded_basis",
    "hilbert_dims", "intersection_lattice", "kernel_basis", "lie_identity_check",
    "make_factorization", "mobius_poincare", "nabla_matrix", "normalize", "parse_weights",
    "poly_arith", "rank", "reduce_mod_linear", "solve", "subcomplex_cohomology", "twisted_betti",
    "univariate_roots", "validate", "wedge",
]
