# app/bench/generators.py

from __future__ import annotations

from typing import Literal, Sequence

import numpy as np

from app.tensor.dense import DenseTensor

TensorKind = Literal["A", "B"]


def generate_function_tensor(kind: TensorKind, shape: Sequence[int]) -> DenseTensor:
    """
    Function-related test tensors with 1-based indices i_k in 1..n_k:

      A(i_1, ..., i_d) = 1 / (i_1 + i_2 + ... + i_d)
      B(i_1, ..., i_d) = 1 / (1*i_1 + 2*i_2 + ... + d*i_d)
    """
    if kind not in ("A", "B"):
        raise ValueError(f"❌ Unknown function tensor kind: {kind}")
    shape = tuple(int(n) for n in shape)
    if not shape or any(n < 1 for n in shape):
        raise ValueError(f"Invalid shape {shape}")

    d = len(shape)
    denominator = np.zeros(shape)
    for axis, n in enumerate(shape):
        weight = 1.0 if kind == "A" else float(axis + 1)
        index_shape = [1] * d
        index_shape[axis] = n
        denominator = denominator + weight * np.arange(1, n + 1, dtype=np.float64).reshape(index_shape)
    return DenseTensor(1.0 / denominator, copy=False)
