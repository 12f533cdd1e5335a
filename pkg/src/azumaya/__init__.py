"""Exact-arithmetic Azumaya checks for cleft extensions of
finite-dimensional Hopf algebras in braided comodule categories."""

__version__ = "0.1.0"

from .checks import CheckResult
from .fields import QQ, FieldError, PrimeField, field_from_name
from .hopf import HopfAlgebraData, dualize, opposite_variants, verify_hopf_axioms
from .linalg import ExactMatrix, LinAlgError
from .convolution import (
    Functional1,
    Functional2,
    check_dqt_rform,
    check_left_2cocycle,
    conv_inverse,
    convolve,
    crossed_product,
    doi_twist,
    twisted_opposite_algebra,
    twisted_rform,
)
from .braided import (
    cleft_is_azumaya,
    dual_side_azumaya,
    is_azumaya,
    rform_pairing_map,
    smash_product,
    to_end_map,
    to_end_op_map,
)
from .en_family import (
    EnParams,
    azumaya_criterion,
    build_clifford,
    build_en,
    derive_cocycle_from_cleft,
    rform_en,
)

__all__ = [
    "CheckResult",
    "QQ",
    "FieldError",
    "PrimeField",
    "field_from_name",
    "HopfAlgebraData",
    "dualize",
    "opposite_variants",
    "verify_hopf_axioms",
    "ExactMatrix",
    "LinAlgError",
    "Functional1",
    "Functional2",
    "check_dqt_rform",
    "check_left_2cocycle",
    "conv_inverse",
    "convolve",
    "crossed_product",
    "doi_twist",
    "twisted_opposite_algebra",
    "twisted_rform",
    "cleft_is_azumaya",
    "dual_side_azumaya",
    "is_azumaya",
    "rform_pairing_map",
    "smash_product",
    "to_end_map",
    "to_end_op_map",
    "EnParams",
    "azumaya_criterion",
    "build_clifford",
    "build_en",
    "derive_cocycle_from_cleft",
    "rform_en",
    "__version__",
]
