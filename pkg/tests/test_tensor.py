import math

import numpy as np
import pytest

from app.errors import DimensionMismatchError, InvalidModeError
from app.tensor import (
    DenseTensor,
    fibers,
    fold,
    frobenius_norm,
    mode_mul,
    relative_error,
    unfold,
    unfolding_product,
)


def _counting_tensor():
    return DenseTensor.from_flat(np.arange(1.0, 9.0), (2, 2, 2))


def _mode_product_loop(T, M, mode):
    """Entry-by-entry k-mode product."""
    shape = list(T.shape)
    shape[mode - 1] = M.shape[0]
    out = np.zeros(shape)
    for idx in np.ndindex(*shape):
        total = 0.0
        for j in range(T.shape[mode - 1]):
            src = list(idx)
            src[mode - 1] = j
            total += M[idx[mode - 1], j] * T.data[tuple(src)]
        out[idx] = total
    return out


def test_unfold_column_major_ordering():
    T = _counting_tensor()
    np.testing.assert_array_equal(unfold(T, 1), [[1, 3, 5, 7], [2, 4, 6, 8]])
    np.testing.assert_array_equal(unfold(T, 2), [[1, 2, 5, 6], [3, 4, 7, 8]])


def test_unfold_vector_is_column():
    T = DenseTensor([1.0, 2.0, 3.0])
    np.testing.assert_array_equal(unfold(T, 1), [[1.0], [2.0], [3.0]])


def test_unfold_rejects_bad_mode():
    with pytest.raises(InvalidModeError):
        unfold(_counting_tensor(), 4)
    with pytest.raises(InvalidModeError):
        unfold(_counting_tensor(), 0)


@pytest.mark.parametrize("mode", [1, 2, 3])
def test_fold_inverts_unfold(random_tensor, mode):
    T = random_tensor(3, 4, 5)
    assert fold(unfold(T, mode), mode, T.shape) == T


def test_fold_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        fold(np.zeros((2, 4)), 1, (2, 3, 2))


def test_mode_mul_identity_is_exact(random_tensor):
    T = random_tensor(3, 4, 5)
    for mode, n in enumerate(T.shape, start=1):
        assert mode_mul(T, np.eye(n), mode) == T


def test_mode_mul_sums_along_mode():
    ones = DenseTensor(np.ones((2, 2, 2)))
    out = mode_mul(ones, np.array([[1.0, 1.0]]), 1)
    assert out.shape == (1, 2, 2)
    np.testing.assert_array_equal(out.data, np.full((1, 2, 2), 2.0))


def test_mode_mul_matches_entrywise_loop(rng, random_tensor):
    T = random_tensor(3, 3, 3)
    M = rng.standard_normal((2, 3))
    for mode in (1, 2, 3):
        np.testing.assert_allclose(mode_mul(T, M, mode).data, _mode_product_loop(T, M, mode), rtol=1e-12, atol=1e-12)


def test_mode_mul_unfolding_homomorphism(rng, random_tensor):
    T = random_tensor(4, 3, 5)
    M = rng.standard_normal((6, 3))
    lhs = unfold(mode_mul(T, M, 2), 2)
    rhs = M @ unfold(T, 2)
    assert np.linalg.norm(lhs - rhs) <= 1e-13 * np.linalg.norm(rhs)


def test_mode_mul_commutes_across_modes(rng, random_tensor):
    T = random_tensor(4, 5, 3)
    M, N = rng.standard_normal((2, 4)), rng.standard_normal((3, 5))
    a = mode_mul(mode_mul(T, M, 1), N, 2).data
    b = mode_mul(mode_mul(T, N, 2), M, 1).data
    assert np.linalg.norm(a - b) <= 1e-13 * np.linalg.norm(a)


def test_mode_mul_dimension_mismatch(random_tensor):
    with pytest.raises(DimensionMismatchError):
        mode_mul(random_tensor(3, 4), np.ones((2, 5)), 1)


def test_frobenius_norm_values(random_tensor):
    assert frobenius_norm(DenseTensor(np.ones((2, 2, 2)))) == math.sqrt(8)
    assert frobenius_norm(DenseTensor.zeros((3, 2))) == 0.0
    T = random_tensor(4, 3, 5)
    for mode in (1, 2, 3):
        assert frobenius_norm(T) == frobenius_norm(unfold(T, mode))


def test_relative_error_cases(random_tensor):
    T = random_tensor(3, 3)
    assert relative_error(T, T) == 0.0
    assert relative_error(T, DenseTensor.zeros(T.shape)) == pytest.approx(1.0)

    ones = np.ones((2, 2, 2))
    bumped = ones.copy()
    bumped[1, 0, 1] += 1.0
    assert relative_error(DenseTensor(ones), DenseTensor(bumped)) == pytest.approx(1 / math.sqrt(8))


def test_relative_error_rejects_bad_inputs(random_tensor):
    with pytest.raises(DimensionMismatchError):
        relative_error(random_tensor(2, 3), random_tensor(3, 2))
    with pytest.raises(ValueError):
        relative_error(DenseTensor.zeros((2, 2)), random_tensor(2, 2))


def test_dense_tensor_validation():
    with pytest.raises(ValueError):
        DenseTensor(np.array([1.0, np.nan]))
    with pytest.raises(DimensionMismatchError):
        DenseTensor.from_flat(np.arange(5.0), (2, 3))
    with pytest.raises(DimensionMismatchError):
        DenseTensor(np.zeros((2, 0)))


def test_dense_tensor_is_read_only():
    T = _counting_tensor()
    with pytest.raises(ValueError):
        T.data[0, 0, 0] = 42.0
    np.testing.assert_array_equal(T.flat, np.arange(1.0, 9.0))


def test_storage_is_column_major(random_tensor):
    T = DenseTensor(np.ascontiguousarray(random_tensor(3, 4, 5).data))
    assert T.data.flags.f_contiguous
    assert np.shares_memory(unfold(T, 1), T.data)


def test_no_copy_leaves_caller_array_writable():
    arr = np.asfortranarray(np.arange(8.0).reshape(2, 2, 2))
    T = DenseTensor(arr, copy=False)
    assert arr.flags.writeable
    assert not T.data.flags.writeable
    arr[0, 0, 0] = 5.0
    assert arr[0, 0, 0] == 5.0


def test_array_protocol_honours_copy():
    T = _counting_tensor()
    copied = np.array(T, copy=True)
    copied[0, 0, 0] = -1.0
    assert T.data[0, 0, 0] == 1.0
    assert not np.shares_memory(np.array(T, copy=True), T.data)
    assert np.asarray(T, dtype=np.float32).dtype == np.float32


@pytest.mark.parametrize("mode", [1, 2, 3, 4])
def test_unfolding_product_matches_explicit_unfolding(rng, random_tensor, mode):
    T = random_tensor(3, 4, 2, 5)
    M = rng.standard_normal((T.size // T.shape[mode - 1], 3))
    np.testing.assert_allclose(unfolding_product(T, mode, M), unfold(T, mode) @ M, rtol=1e-12, atol=1e-12)


def test_unfolding_product_shape_mismatch(random_tensor):
    with pytest.raises(DimensionMismatchError):
        unfolding_product(random_tensor(3, 4, 5), 2, np.zeros((7, 2)))


@pytest.mark.parametrize("mode", [1, 2, 3])
def test_fibers_are_unfolding_columns(random_tensor, mode):
    T = random_tensor(3, 4, 5)
    A = unfold(T, mode)
    cols = [0, A.shape[1] - 1, 7, 3]
    np.testing.assert_array_equal(fibers(T, mode, cols), A[:, cols])
    with pytest.raises(DimensionMismatchError):
        fibers(T, mode, [A.shape[1]])


def test_mode_mul_four_modes_matches_loop(rng, random_tensor):
    T = random_tensor(2, 3, 2, 3)
    for mode, n in enumerate(T.shape, start=1):
        M = rng.standard_normal((4, n))
        np.testing.assert_allclose(mode_mul(T, M, mode).data, _mode_product_loop(T, M, mode), atol=1e-12)
