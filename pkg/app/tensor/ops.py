# app/tensor/ops.py

"""
Multilinear algebra on dense tensors.

Unfoldings use the Kolda-Bader column order: the mode-k fiber at
(i_1, ..., :, ..., i_d) is column 1 + sum_{m != k} (i_m - 1) * J_m with
J_m = prod_{l < m, l != k} n_l. Modes are 1-based.
"""

from __future__ import annotations

import math
from typing import Sequence, Union

import numpy as np

from app.errors import DimensionMismatchError, InvalidModeError
from app.tensor.dense import DenseTensor, Matrix, as_matrix


def _axis(mode: int, ndim: int) -> int:
    if not isinstance(mode, (int, np.integer)) or not 1 <= mode <= ndim:
        raise InvalidModeError(f"Mode {mode} out of range 1..{ndim}")
    return int(mode) - 1


def unfold(tensor: DenseTensor, mode: int) -> Matrix:
    """Mode-`mode` matricization, n_mode x prod_{k != mode} n_k."""
    axis = _axis(mode, tensor.ndim)
    data = tensor.data
    return np.reshape(np.moveaxis(data, axis, 0), (data.shape[axis], -1), order="F")


def fold(matrix: Matrix, mode: int, shape: Sequence[int]) -> DenseTensor:
    """Inverse of :func:`unfold` for a tensor of the given shape."""
    shape = tuple(int(n) for n in shape)
    axis = _axis(mode, len(shape))
    matrix = as_matrix(matrix)
    rest = [n for k, n in enumerate(shape) if k != axis]
    expected = (shape[axis], int(np.prod(rest, dtype=np.int64)))
    if matrix.shape != expected:
        raise DimensionMismatchError(
            f"Cannot fold a {matrix.shape} matrix along mode {mode} into shape {shape}"
        )
    folded = np.reshape(matrix, [shape[axis], *rest], order="F")
    return DenseTensor(np.moveaxis(folded, 0, axis), check_finite=False)


def _blocks(data: np.ndarray, axis: int) -> np.ndarray:
    """View a tensor as (P, n_axis, S): P modes before the axis, S after."""
    shape = data.shape
    before = int(np.prod(shape[:axis], dtype=np.int64))
    after = int(np.prod(shape[axis + 1:], dtype=np.int64))
    return np.reshape(data, (before, shape[axis], after), order="F")


def mode_mul(tensor: DenseTensor, matrix: Matrix, mode: int) -> DenseTensor:
    """k-mode product T x_k M; the mode-k extent becomes M.rows."""
    axis = _axis(mode, tensor.ndim)
    # one layout for every factor keeps results independent of how it was stored
    matrix = np.ascontiguousarray(as_matrix(matrix))
    if matrix.shape[1] != tensor.shape[axis]:
        raise DimensionMismatchError(
            f"Matrix with {matrix.shape[1]} columns cannot multiply mode {mode} "
            f"of extent {tensor.shape[axis]}"
        )
    new_shape = list(tensor.shape)
    new_shape[axis] = matrix.shape[0]

    X = _blocks(tensor.data, axis)
    if X.shape[0] == 1:
        out = (X[0].T @ matrix.T).T[np.newaxis]
    else:
        # one GEMM per trailing block; (S, m, P) C-order is (P, m, S) F-order
        out = np.matmul(matrix, X.transpose(2, 1, 0)).transpose(2, 1, 0)
    return DenseTensor(np.reshape(out, new_shape, order="F"), check_finite=False, copy=False)


def unfolding_product(tensor: DenseTensor, mode: int, matrix: Matrix) -> Matrix:
    """A_(mode) @ M without materializing the unfolding."""
    axis = _axis(mode, tensor.ndim)
    matrix = as_matrix(matrix)
    X = _blocks(tensor.data, axis)
    before, n, after = X.shape
    if matrix.shape[0] != before * after:
        raise DimensionMismatchError(
            f"Matrix with {matrix.shape[0]} rows cannot multiply the mode-{mode} "
            f"unfolding with {before * after} columns"
        )
    if before == 1:
        return X[0] @ matrix
    # row p + P*s of M pairs with column p + P*s of the unfolding
    blocks = np.ascontiguousarray(
        np.reshape(matrix, (before, after, matrix.shape[1]), order="F").transpose(1, 0, 2)
    )
    return np.matmul(X.transpose(2, 1, 0), blocks).sum(axis=0)


def fibers(tensor: DenseTensor, mode: int, columns: Sequence[int]) -> Matrix:
    """The mode-`mode` fibers at the given 0-based unfolding columns, one per column."""
    axis = _axis(mode, tensor.ndim)
    rest = [n for k, n in enumerate(tensor.shape) if k != axis]
    n = tensor.shape[axis]
    columns = np.asarray(columns, dtype=np.int64)
    if columns.size == 0:
        return np.empty((n, 0))
    if columns.min() < 0 or columns.max() >= int(np.prod(rest, dtype=np.int64)):
        raise DimensionMismatchError(f"Fiber column out of range for mode {mode} of {tensor.shape}")
    coords = np.unravel_index(columns, rest, order="F") if rest else ()
    out = np.empty((n, columns.size))
    for j in range(columns.size):
        index = [int(c[j]) for c in coords]
        index.insert(axis, slice(None))
        out[:, j] = tensor.data[tuple(index)]
    return out


def multi_mode_mul(tensor: DenseTensor, matrices: Sequence[Matrix]) -> DenseTensor:
    """T x_1 M_1 x_2 ... x_d M_d, applied in ascending mode order."""
    if len(matrices) != tensor.ndim:
        raise DimensionMismatchError(
            f"Need {tensor.ndim} matrices, got {len(matrices)}"
        )
    out = tensor
    for mode, m in enumerate(matrices, start=1):
        out = mode_mul(out, m, mode)
    return out


def frobenius_norm(x: Union[DenseTensor, np.ndarray]) -> float:
    """
    sqrt of the sum of squared entries.

    The sum is correctly rounded (math.fsum), so the value does not depend on
    the order in which entries are stored: a tensor and any of its unfoldings
    give the same result exactly.
    """
    values = np.asarray(x.data if isinstance(x, DenseTensor) else x, dtype=np.float64)
    squares = np.square(values).ravel()
    return math.sqrt(math.fsum(squares))


def relative_error(reference: DenseTensor, approx: DenseTensor) -> float:
    """||reference - approx||_F / ||reference||_F."""
    if reference.shape != approx.shape:
        raise DimensionMismatchError(
            f"Shape mismatch: {reference.shape} vs {approx.shape}"
        )
    ref_norm = frobenius_norm(reference)
    if ref_norm == 0.0:
        raise ValueError("Relative error is undefined for a zero reference tensor")
    return frobenius_norm(reference.data - approx.data) / ref_norm
