# app/analysis/spectra.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from app.kernels.svd import thin_svd
from app.tensor.dense import DenseTensor
from app.tensor.ops import unfold


def mode_singular_values(tensor: DenseTensor, mode: int) -> np.ndarray:
    """All singular values of the mode unfolding, descending."""
    return thin_svd(unfold(tensor, mode)).S


@dataclass(frozen=True, eq=False)
class ModeSpectra:
    """Descending singular values of each unfolding, mode 1 first."""

    values: Tuple[np.ndarray, ...]

    def __post_init__(self):
        for mode, s in enumerate(self.values, start=1):
            s = np.asarray(s)
            if np.any(s < 0):
                raise ValueError(f"Mode {mode} spectrum has negative values")
            if np.any(np.diff(s) > 0):
                raise ValueError(f"Mode {mode} spectrum is not non-increasing")

    @classmethod
    def from_tensor(cls, tensor: DenseTensor) -> ModeSpectra:
        return cls(tuple(mode_singular_values(tensor, k) for k in range(1, tensor.ndim + 1)))

    @classmethod
    def from_sequences(cls, values: Sequence[Sequence[float]]) -> ModeSpectra:
        return cls(tuple(np.asarray(v, dtype=np.float64) for v in values))

    def trailing(self, mode: int, r: int) -> float:
        """sigma_{r+1} of the mode; zero when r equals the spectrum length."""
        s = self.values[mode - 1]
        if r > s.size:
            raise ValueError(f"Rank {r} exceeds the {s.size} singular values of mode {mode}")
        return float(s[r]) if r < s.size else 0.0
