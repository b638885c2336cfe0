from app.kernels.pinv import orthonormal_pinv_factor
from app.kernels.pivoted_qr import PivotedQR, truncated_pivoted_qr
from app.kernels.rng import SeededRng, gaussian_matrix
from app.kernels.svd import ThinSVD, thin_svd

__all__ = [
    "PivotedQR",
    "SeededRng",
    "ThinSVD",
    "gaussian_matrix",
    "orthonormal_pinv_factor",
    "thin_svd",
    "truncated_pivoted_qr",
]
