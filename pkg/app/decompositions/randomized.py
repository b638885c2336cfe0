# app/decompositions/randomized.py

from __future__ import annotations

import time

import scipy.linalg

from app.decompositions.core import compute_core
from app.decompositions.deterministic import select_fibers
from app.decompositions.model import FactorKind, SketchConfig, TuckerModel
from app.kernels.rng import SeededRng, gaussian_matrix
from app.kernels.svd import thin_svd
from app.tensor.dense import DenseTensor, Matrix
from app.tensor.ops import mode_mul, unfold, unfolding_product
from utils.logger import logger


def sketch_unfolding(tensor: DenseTensor, mode: int, omega: Matrix) -> Matrix:
    """Omega @ A_(mode), formed as the mode product T x_mode Omega."""
    return unfold(mode_mul(tensor, omega, mode), mode)


def row_space_geometry(tensor: DenseTensor, mode: int, V: Matrix) -> Matrix:
    """
    Small matrix whose columns have the inner products of A_(mode) V V^T.

    V holds an orthonormal basis of the sketch row space. With A V = Q R the
    columns of R V^T are isometric to those of A V V^T, so pivoted QR on them
    ranks unfolding columns as pivoted QR on A would, up to the part of A
    outside the sketched row space.
    """
    B = unfolding_product(tensor, mode, V)
    R = scipy.linalg.qr(B, mode="economic", check_finite=False)[1]
    return R @ V.T


def randomized_hybrid(tensor: DenseTensor, cfg: SketchConfig) -> TuckerModel:
    """
    Randomized hybrid decomposition.

    Every mode k is sketched as Omega_k A_(k), with Omega_k an (r_k + p) x n_k
    Gaussian drawn from stream k of the seed; V_k spans the sketch row space.
    Fiber modes 1..t pick columns by pivoted QR on A_(k) projected onto V_k.
    Remaining modes take Q from the leading r_k right singular vectors of the
    sketch and U_k from the left singular vectors of A_(k) Q. Unfoldings of the
    full tensor are never formed.
    """
    cfg.validate_for(tensor.shape)
    oversampling = cfg.sketch_oversampling(tensor.shape)
    rng = SeededRng(cfg.seed)

    logger.info(
        f"🎲 rhybrid: shape={tensor.shape} ranks={cfg.ranks} t={cfg.fiber_modes} "
        f"p={cfg.oversampling} seed={cfg.seed}"
    )
    start = time.perf_counter()

    factors, kinds, indices = [], [], []
    for mode, (n, r, p) in enumerate(zip(tensor.shape, cfg.ranks, oversampling), start=1):
        omega = gaussian_matrix(r + p, n, rng.substream(mode))
        sketch_svd = thin_svd(sketch_unfolding(tensor, mode, omega))

        if mode <= cfg.fiber_modes:
            geometry = row_space_geometry(tensor, mode, sketch_svd.V)
            C, idx = select_fibers(tensor, mode, geometry, r)
            factors.append(C)
            kinds.append(FactorKind.FIBER_SAMPLED)
            indices.append(idx)
        else:
            AQ = unfolding_product(tensor, mode, sketch_svd.leading_right(r))
            factors.append(thin_svd(AQ).leading_left(r))
            kinds.append(FactorKind.ORTHONORMAL)
            indices.append(None)

    core = compute_core(tensor, factors, kinds)
    logger.info(f"✅ rhybrid finished in {time.perf_counter() - start:.4f}s")
    return TuckerModel(
        core=core,
        factors=tuple(factors),
        kinds=tuple(kinds),
        fiber_indices=tuple(indices),
        config=cfg,
        method="rhybrid",
    )
