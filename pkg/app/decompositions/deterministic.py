# app/decompositions/deterministic.py

"""HOSVD, HOID and the deterministic hybrid CUR-type Tucker decomposition."""

from __future__ import annotations

import time
from typing import Sequence, Tuple

from app.decompositions.core import compute_core
from app.decompositions.model import FactorKind, SketchConfig, TuckerModel, check_ranks
from app.kernels.pivoted_qr import truncated_pivoted_qr
from app.kernels.svd import thin_svd
from app.tensor.dense import DenseTensor, Matrix
from app.tensor.ops import fibers, unfold
from utils.logger import logger


def leading_left_singular_vectors(unfolding: Matrix, r: int) -> Matrix:
    return thin_svd(unfolding).leading_left(r)


def select_fibers(tensor: DenseTensor, mode: int, geometry: Matrix, r: int) -> Tuple[Matrix, Tuple[int, ...]]:
    """
    Pivoted QR on the columns of `geometry`, a matrix whose columns stand in
    for the mode-`mode` unfolding; returns the matching tensor fibers and their
    0-based unfolding indices.
    """
    pqr = truncated_pivoted_qr(geometry, r)
    if pqr.rank_deficient:
        logger.warning(
            f"⚠️ Mode {mode}: only {pqr.rank} of {r} fibers are numerically independent; "
            f"factor width reduced"
        )
    return fibers(tensor, mode, pqr.pivots), pqr.pivots


def hybrid(tensor: DenseTensor, ranks: Sequence[int], t: int, *, method: str = "hybrid") -> TuckerModel:
    """
    Fiber-sampled factors on modes 1..t from a pivoted QR of each unfolding,
    leading left singular vectors on modes t+1..d, then the core.
    """
    ranks = check_ranks(tensor.shape, ranks)
    cfg = SketchConfig(ranks=ranks, fiber_modes=t, oversampling=0, seed=0)
    cfg.validate_for(tensor.shape)

    logger.info(f"🔧 {method}: shape={tensor.shape} ranks={ranks} t={t}")
    start = time.perf_counter()

    factors, kinds, indices = [], [], []
    for mode, r in enumerate(ranks, start=1):
        A = unfold(tensor, mode)
        if mode <= t:
            C, idx = select_fibers(tensor, mode, A, r)
            factors.append(C)
            kinds.append(FactorKind.FIBER_SAMPLED)
            indices.append(idx)
        else:
            factors.append(leading_left_singular_vectors(A, r))
            kinds.append(FactorKind.ORTHONORMAL)
            indices.append(None)

    core = compute_core(tensor, factors, kinds)
    logger.info(f"✅ {method} finished in {time.perf_counter() - start:.4f}s")
    return TuckerModel(
        core=core,
        factors=tuple(factors),
        kinds=tuple(kinds),
        fiber_indices=tuple(indices),
        config=cfg,
        method=method,
    )


def hosvd(tensor: DenseTensor, ranks: Sequence[int]) -> TuckerModel:
    """Truncated HOSVD: every factor holds leading left singular vectors."""
    return hybrid(tensor, ranks, 0, method="hosvd")


def hoid(tensor: DenseTensor, ranks: Sequence[int]) -> TuckerModel:
    """Higher-order interpolatory decomposition: fibers in every mode."""
    return hybrid(tensor, ranks, tensor.ndim, method="hoid")
