# app/kernels/pinv.py

from __future__ import annotations

import numpy as np
import scipy.linalg

from app.errors import RankDeficiencyError
from app.tensor.dense import Matrix, as_matrix
from utils.config_loader import config


def orthonormal_pinv_factor(C: Matrix, condition_limit: float | None = None) -> Matrix:
    """
    Moore-Penrose pseudoinverse of a full-column-rank C via C = QR:
    C^+ = R^{-1} Q^T, a k x rows left inverse.
    """
    C = as_matrix(C)
    rows, k = C.shape
    if condition_limit is None:
        condition_limit = float(config.get("kernels", "pinv_condition_limit", default=1e12))
    if k > rows:
        raise RankDeficiencyError(f"A {rows}x{k} factor cannot have full column rank")

    Q, R = scipy.linalg.qr(C, mode="economic", check_finite=False)
    with np.errstate(divide="ignore", invalid="ignore"):
        cond = float(np.linalg.cond(R)) if np.any(R) else np.inf
    if not np.isfinite(cond) or cond >= condition_limit:
        raise RankDeficiencyError(
            f"Factor is rank-deficient or ill-conditioned (condition estimate {cond:.3e})"
        )
    return scipy.linalg.solve_triangular(R, Q.T, lower=False, check_finite=False)
