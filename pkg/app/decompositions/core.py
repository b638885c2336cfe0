# app/decompositions/core.py

from __future__ import annotations

from typing import Sequence

from app.decompositions.model import FactorKind, TuckerModel
from app.kernels.pinv import orthonormal_pinv_factor
from app.tensor.dense import DenseTensor, Matrix
from app.tensor.ops import multi_mode_mul


def contraction_factor(factor: Matrix, kind: FactorKind) -> Matrix:
    """C^+ for fiber-sampled factors, U^T for orthonormal ones."""
    if kind is FactorKind.FIBER_SAMPLED:
        return orthonormal_pinv_factor(factor)
    return factor.T


def projector(factor: Matrix, kind: FactorKind) -> Matrix:
    """Orthogonal projector onto the factor's column space (C C^+ or U U^T)."""
    return factor @ contraction_factor(factor, kind)


def compute_core(
    tensor: DenseTensor, factors: Sequence[Matrix], kinds: Sequence[FactorKind]
) -> DenseTensor:
    """G = T x_1 F_1 ... x_d F_d with F from :func:`contraction_factor`."""
    return multi_mode_mul(
        tensor, [contraction_factor(f, k) for f, k in zip(factors, kinds)]
    )


def reconstruct(model: TuckerModel) -> DenseTensor:
    return multi_mode_mul(model.core, list(model.factors))
