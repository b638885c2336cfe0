# app/kernels/svd.py

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from app.errors import ConvergenceError
from app.tensor.dense import Matrix, as_matrix
from utils.config_loader import config
from utils.logger import logger


@dataclass(frozen=True, eq=False)
class ThinSVD:
    """M = U diag(S) V^T with q = min(rows, cols) columns in U and V."""

    U: Matrix
    S: np.ndarray
    V: Matrix

    @property
    def rank(self) -> int:
        return int(self.S.size)

    def leading_left(self, r: int) -> Matrix:
        return np.ascontiguousarray(self.U[:, :r])

    def leading_right(self, r: int) -> Matrix:
        return np.ascontiguousarray(self.V[:, :r])


def thin_svd(matrix: Matrix) -> ThinSVD:
    """
    Economy SVD through LAPACK.

    Tries the configured driver first (gesdd by default) and falls back to the
    QR-iteration driver gesvd; LAPACK caps its own sweeps, and a failure of both
    drivers is reported as ConvergenceError. Column signs are fixed so that the
    largest-magnitude entry of each left singular vector is positive.
    """
    m = as_matrix(matrix)
    primary = config.get("kernels", "svd_lapack_driver", default="gesdd")
    drivers = [primary] + [d for d in ("gesdd", "gesvd") if d != primary]

    last_error: Exception | None = None
    for driver in drivers:
        try:
            U, S, Vt = scipy.linalg.svd(
                m, full_matrices=False, lapack_driver=driver, check_finite=False
            )
            break
        except np.linalg.LinAlgError as e:
            logger.warning(f"⚠️ SVD driver {driver} failed on {m.shape} matrix: {e}")
            last_error = e
    else:
        raise ConvergenceError(f"SVD did not converge for a {m.shape} matrix") from last_error

    signs = np.sign(U[np.argmax(np.abs(U), axis=0), np.arange(U.shape[1])])
    signs[signs == 0] = 1.0
    return ThinSVD(U=U * signs, S=S, V=Vt.T * signs)
