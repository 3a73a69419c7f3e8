"""Exact computations with constants of Weitzenboeck derivations.

Polynomials in free and commutative algebras, a few relatively free
quotients, kernels of linear derivations graded piece by graded piece,
two-variable Hilbert series, and the trace algebra of two generic 2x2
matrices.  All arithmetic is over the rationals.
"""
from .derivations import (
    Automorphism,
    JordanType,
    LinearDerivation,
    NotLocallyNilpotent,
    PolyDerivation,
    apply_derivation,
    exp_derivation,
    log_automorphism,
)
from .kernel import KernelBasis, highest_weight_test, is_constant, kernel_at, lifting_check
from .linalg import LayerTooLarge
from .parsing import ParseError, parse_cpoly, parse_ncpoly, poly_from_json, poly_to_json
from .poly import CPoly, NCPoly
from .quotients import (
    Commutative,
    FreeAssoc,
    GrassmannL2,
    Metabelian2,
    Wreath,
    lr_operator,
    make_context,
    wreath_embed,
)
from .series import TruncSeries2, schur2, schur_decompose

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "CPoly",
    "Commutative",
    "FreeAssoc",
    "GrassmannL2",
    "JordanType",
    "KernelBasis",
    "LayerTooLarge",
    "LinearDerivation",
    "Metabelian2",
    "NCPoly",
    "NotLocallyNilpotent",
    "ParseError",
    "PolyDerivation",
    "TruncSeries2",
    "Wreath",
    "apply_derivation",
    "exp_derivation",
    "highest_weight_test",
    "is_constant",
    "kernel_at",
    "lifting_check",
    "log_automorphism",
    "lr_operator",
    "make_context",
    "parse_cpoly",
    "parse_ncpoly",
    "poly_from_json",
    "poly_to_json",
    "schur2",
    "schur_decompose",
    "wreath_embed",
]
