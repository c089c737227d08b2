"""Exact homological algebra over graded quotient algebras."""
from .linalg import GF, QQ, PrimeField, Rationals
from .ring import GradedAlgebra, WindowError, build_algebra
from .series import LaurentPolyZ, series_mul
from .modules import (
    FreeModule,
    Module,
    RMatrix,
    direct_sum,
    free_module,
    hom_module,
    presented_module,
    residue_field_module,
    tensor_module,
)
from .complexes import Complex, hom_complex, sup_inf, tensor_complex
from .resolutions import (
    bass_numbers,
    bass_series,
    betti_gap_check,
    ext_dims,
    minimal_free_resolution,
    poincare_series,
    tor_dims,
)
from .duality import (
    beta0,
    beta0_identity,
    check_chain,
    check_homothety,
    check_semidualizing,
    check_totally_reflexive,
    cm_type,
    factorization_check,
    matlis_dual,
)
from .bounds import verify_prop0101, verify_prop0102, verify_prop0103, verify_thm0101
from .ringfile import parse_ring_file

__version__ = "0.1.0"
