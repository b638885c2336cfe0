# app/kernels/pivoted_qr.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from app.tensor.dense import Matrix, as_matrix
from utils.logger import logger


@dataclass(frozen=True, eq=False)
class PivotedQR:
    """
    Truncated factorization M[:, pivots] ~ Q R.

    pivots: 0-based column indices in selection order.
    Q: rows x k orthonormal.
    R: k x cols upper-trapezoidal, columns in pivoted order (selected
       columns first, the rest in their original order).
    rank_deficient: True when the residual vanished before k pivots.
    """

    pivots: Tuple[int, ...]
    Q: Matrix
    R: Matrix
    rank_deficient: bool = False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def column_order(self) -> np.ndarray:
        return _column_order(self.pivots, self.R.shape[1])


def _column_order(pivots, cols: int) -> np.ndarray:
    chosen = np.asarray(pivots, dtype=np.int64)
    return np.concatenate([chosen, np.setdiff1d(np.arange(cols), chosen)])


def truncated_pivoted_qr(matrix: Matrix, k: int) -> PivotedQR:
    """
    Businger-Golub column pivoting via Gram-Schmidt, stopped after k steps.

    Each step picks the column with the largest residual norm (lowest index on
    ties), orthogonalizes it twice against the basis built so far, and deflates
    the residual. Residual norms are recomputed every step rather than
    downdated.
    """
    m = as_matrix(matrix)
    rows, cols = m.shape
    if not 1 <= k <= min(rows, cols):
        raise ValueError(f"k must lie in 1..{min(rows, cols)}, got {k}")

    residual = np.array(m, dtype=np.float64, order="F", copy=True)
    Q = np.zeros((rows, k))
    R_rows = np.zeros((k, cols))
    pivots: list[int] = []
    chosen = np.zeros(cols, dtype=bool)

    col_norms = np.sqrt(np.einsum("ij,ij->j", m, m))
    tol = 10 * max(rows, cols) * np.finfo(np.float64).eps * float(col_norms.max(initial=0.0))

    for step in range(k):
        norms = np.sqrt(np.einsum("ij,ij->j", residual, residual))
        norms[chosen] = -1.0
        j = int(np.argmax(norms))
        if norms[j] <= tol:
            logger.warning(
                f"⚠️ Pivoted QR stopped after {step} of {k} pivots: residual norms vanished"
            )
            return _finish(m, Q[:, :step], R_rows[:step], pivots, rank_deficient=True)

        q = residual[:, j] / norms[j]
        basis = Q[:, :step]
        for _ in range(2):
            q = q - basis @ (basis.T @ q)
            q = q / np.linalg.norm(q)
        Q[:, step] = q

        coeffs = q @ residual
        R_rows[step] = coeffs
        residual -= np.outer(q, coeffs)

        pivots.append(j)
        chosen[j] = True

    return _finish(m, Q, R_rows, pivots, rank_deficient=False)


def _finish(m: Matrix, Q: Matrix, R_rows: Matrix, pivots: list[int], rank_deficient: bool) -> PivotedQR:
    k = len(pivots)
    R = R_rows[:, _column_order(pivots, m.shape[1])]
    # entries below the diagonal of the leading block are rounding noise
    R[:, :k] = np.triu(R[:, :k])
    return PivotedQR(
        pivots=tuple(int(p) for p in pivots),
        Q=np.ascontiguousarray(Q),
        R=R,
        rank_deficient=rank_deficient,
    )
