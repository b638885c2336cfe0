from app.tensor.dense import DenseTensor, Matrix, as_matrix
from app.tensor.ops import (
    fibers,
    fold,
    frobenius_norm,
    mode_mul,
    multi_mode_mul,
    relative_error,
    unfold,
    unfolding_product,
)

__all__ = [
    "DenseTensor",
    "Matrix",
    "as_matrix",
    "fibers",
    "fold",
    "frobenius_norm",
    "mode_mul",
    "multi_mode_mul",
    "relative_error",
    "unfold",
    "unfolding_product",
]
