# app/tensor/dense.py

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from app.errors import DimensionMismatchError

Matrix = NDArray[np.float64]


def as_matrix(values: ArrayLike) -> Matrix:
    """Coerce to a 2-D float64 array (rows x cols)."""
    m = np.asarray(values, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionMismatchError(f"Expected a 2-D matrix, got {m.ndim} dimensions")
    return m


class DenseTensor:
    """
    Immutable d-dimensional array of 64-bit floats.

    ``data`` is a read-only, Fortran-ordered numpy array of shape ``shape``;
    its memory is the flat data sequence, first index fastest, so the mode-1
    unfolding and the k-mode products in :mod:`app.tensor.ops` work on views.

    Construct from an ndarray, or from a flat column-major sequence with
    :meth:`from_flat`.
    """

    __slots__ = ("_data",)

    def __init__(self, data: ArrayLike, *, check_finite: bool = True, copy: bool = True):
        arr = np.array(data, dtype=np.float64, copy=copy or None, order="F")
        if arr.ndim < 1:
            raise DimensionMismatchError("A tensor needs at least one mode")
        if any(n < 1 for n in arr.shape):
            raise DimensionMismatchError(f"Every extent must be >= 1, got {arr.shape}")
        if check_finite and not np.all(np.isfinite(arr)):
            raise ValueError("Tensor entries must be finite (no NaN/Inf)")
        # freeze a view so a caller passing copy=False keeps a writable array
        arr = arr.view()
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def from_flat(cls, flat: ArrayLike, shape: Iterable[int]) -> DenseTensor:
        shape = tuple(int(n) for n in shape)
        flat = np.asarray(flat, dtype=np.float64).ravel()
        if flat.size != int(np.prod(shape, dtype=np.int64)) or len(shape) == 0:
            raise DimensionMismatchError(
                f"Data length {flat.size} does not match shape {shape}"
            )
        return cls(np.reshape(flat, shape, order="F"))

    @classmethod
    def zeros(cls, shape: Sequence[int]) -> DenseTensor:
        return cls(np.zeros(tuple(shape)), copy=False)

    @property
    def data(self) -> NDArray[np.float64]:
        return self._data

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(self._data.shape)

    @property
    def ndim(self) -> int:
        return self._data.ndim

    @property
    def size(self) -> int:
        return int(self._data.size)

    @property
    def flat(self) -> NDArray[np.float64]:
        """Column-major flat copy of the entries."""
        return self._data.ravel(order="F").copy()

    def __array__(self, dtype=None, copy=None):
        if copy:
            return np.array(self._data, dtype=dtype, copy=True)
        if dtype is not None and np.dtype(dtype) != self._data.dtype:
            if copy is False:
                raise ValueError(f"Cannot view a float64 tensor as {np.dtype(dtype)} without copying")
            return self._data.astype(dtype)
        return self._data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    __hash__ = None

    def __repr__(self) -> str:
        return f"DenseTensor(shape={self.shape})"
