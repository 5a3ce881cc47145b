"""Quandle cohomology of Alexander quandles F_q[T]/(T - w) with coefficients in F_q."""
from .cocycles import CocycleSpec, enumerate_I, enumerate_J2, enumerate_Q, parse_spec, realize
from .complex import ComplexCtx, basis_C, cohomology_dim, delta, delta_matrix
from .errors import AlexcohError
from .gf import GF, FieldElement, Omega, catalog_field, element_order, make_field, prime_field
from .linalg import MatrixFq, kernel_basis, rank
from .oracle import cross_check, oracle_h_dim, phi, quandle_from
from .polyring import Polynomial

__version__ = "0.1.0"

__all__ = [
    "AlexcohError",
    "CocycleSpec",
    "ComplexCtx",
    "FieldElement",
    "GF",
    "MatrixFq",
    "Omega",
    "Polynomial",
    "basis_C",
    "catalog_field",
    "cohomology_dim",
    "cross_check",
    "delta",
    "delta_matrix",
    "element_order",
    "enumerate_I",
    "enumerate_J2",
    "enumerate_Q",
    "kernel_basis",
    "make_field",
    "oracle_h_dim",
    "parse_spec",
    "phi",
    "prime_field",
    "quandle_from",
    "rank",
    "realize",
]
