"""Exact construction and verification of co-split Lie algebras.

A co-split Lie algebra is a Lie algebra L with a Lie coalgebra structure
delta : L -> L (x) L such that [,] o delta = id. This package builds the
cobracket on sl_m, restricts it to so_m and sp_m in their defining
representations, and checks every identity involved in exact rational
arithmetic.
"""

from .coalgebra import (
    Cobracket,
    CosplitKind,
    CosplitVerdict,
    check_anticocommutativity,
    check_cojacobi,
    classify_cosplit,
    cobracket_equivariance_residual,
    delta_sl,
)
from .duality import (
    adjoint_factorization_check,
    dual_bracket_constants,
    dualize,
    form_B,
    iso_B_check,
    killing_form,
    proportionality,
    trace_form,
)
from .errors import CosplitError
from .exact import DenseMatrix, Rational, format_rational, kernel_basis, rank, solve_linear
from .lie_matrix import (
    AlgebraPresentation,
    E,
    SquareMatrix,
    bracket_map,
    commutator,
    coords,
    derived_algebra_is_full,
    sl_basis,
)
from .restriction import (
    adjoint_factorization_res_check,
    cosplit_scalar_direct,
    cosplit_scalar_formula,
    delta_res,
    embed_classical,
    embed_identity,
    embed_subalgebra,
    orthogonal_complement,
    root_datum,
    scalar_report,
)
from .tensor_space import Tensor2, Tensor3, apply_one_tensor_delta, tau, xi

__version__ = "0.1.0"

__all__ = [
    "Cobracket",
    "CosplitKind",
    "CosplitVerdict",
    "check_anticocommutativity",
    "check_cojacobi",
    "classify_cosplit",
    "cobracket_equivariance_residual",
    "delta_sl",
    "adjoint_factorization_check",
    "dual_bracket_constants",
    "dualize",
    "form_B",
    "iso_B_check",
    "killing_form",
    "proportionality",
    "trace_form",
    "AlgebraPresentation",
    "E",
    "SquareMatrix",
    "bracket_map",
    "commutator",
    "coords",
    "derived_algebra_is_full",
    "sl_basis",
    "adjoint_factorization_res_check",
    "cosplit_scalar_direct",
    "cosplit_scalar_formula",
    "delta_res",
    "embed_classical",
    "embed_identity",
    "embed_subalgebra",
    "orthogonal_complement",
    "root_datum",
    "scalar_report",
    "CosplitError",
    "DenseMatrix",
    "Rational",
    "format_rational",
    "kernel_basis",
    "rank",
    "solve_linear",
    "Tensor2",
    "Tensor3",
    "apply_one_tensor_delta",
    "tau",
    "xi",
]
