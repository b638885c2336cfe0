# app/decompositions/model.py

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.tensor.dense import DenseTensor, Matrix
from utils.config_loader import config
from utils.logger import logger


class FactorKind(str, Enum):
    FIBER_SAMPLED = "fiber_sampled"
    ORTHONORMAL = "orthonormal"


class SketchConfig(BaseModel):
    """Target multilinear rank, number of fiber modes t, oversampling p and seed."""

    model_config = ConfigDict(frozen=True)

    ranks: Tuple[int, ...] = Field(..., min_length=1)
    fiber_modes: int = Field(0, ge=0)
    oversampling: int = Field(0, ge=0)
    seed: int = Field(0, ge=0, lt=2**64)

    @field_validator("ranks")
    @classmethod
    def _positive_ranks(cls, ranks: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(r < 1 for r in ranks):
            raise ValueError(f"Ranks must be positive, got {ranks}")
        return ranks

    @classmethod
    def from_config(cls, **overrides) -> SketchConfig:
        values = {
            "ranks": tuple(config.get("sketch", "ranks", default=[5, 5, 5])),
            "fiber_modes": int(config.get("sketch", "fiber_modes", default=1)),
            "oversampling": int(config.get("sketch", "oversampling", default=5)),
            "seed": int(config.get("sketch", "seed", default=42)),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def validate_for(self, shape: Sequence[int]) -> None:
        """Check ranks and t against a tensor shape."""
        check_ranks(shape, self.ranks)
        if not 0 <= self.fiber_modes <= len(shape):
            raise ValueError(
                f"Fiber mode count t={self.fiber_modes} must lie in 0..{len(shape)}"
            )

    def sketch_oversampling(self, shape: Sequence[int]) -> Tuple[int, ...]:
        """Per-mode p, clamped so that r_k + p <= n_k."""
        clamped = []
        for mode, (n, r) in enumerate(zip(shape, self.ranks), start=1):
            p = min(self.oversampling, n - r)
            if p < self.oversampling:
                logger.warning(
                    f"⚠️ Oversampling clamped to {p} in mode {mode} (n={n}, r={r}, p={self.oversampling})"
                )
            clamped.append(p)
        return tuple(clamped)


def check_ranks(shape: Sequence[int], ranks: Sequence[int]) -> Tuple[int, ...]:
    shape = tuple(int(n) for n in shape)
    ranks = tuple(int(r) for r in ranks)
    if len(ranks) != len(shape):
        raise ValueError(f"Need one rank per mode: shape {shape}, ranks {ranks}")
    for mode, (n, r) in enumerate(zip(shape, ranks), start=1):
        if not 1 <= r <= n:
            raise ValueError(f"Rank {r} in mode {mode} must lie in 1..{n}")
        rest = int(np.prod([m for k, m in enumerate(shape) if k != mode - 1], dtype=np.int64))
        if r > rest:
            raise ValueError(
                f"Rank {r} in mode {mode} exceeds the unfolding width {rest}"
            )
    return ranks


@dataclass(frozen=True, eq=False)
class TuckerModel:
    """
    core x_1 F_1 ... x_d F_d with per-mode factor kinds.

    fiber_indices[k] holds the 0-based unfolding columns behind a
    fiber-sampled factor and None for orthonormal factors.
    """

    core: DenseTensor
    factors: Tuple[Matrix, ...]
    kinds: Tuple[FactorKind, ...]
    fiber_indices: Tuple[Optional[Tuple[int, ...]], ...]
    config: SketchConfig
    method: str

    def __post_init__(self):
        d = self.core.ndim
        if not len(self.factors) == len(self.kinds) == len(self.fiber_indices) == d:
            raise ValueError("Core order, factors, kinds and fiber indices disagree")
        for mode, (f, r) in enumerate(zip(self.factors, self.core.shape), start=1):
            if f.ndim != 2 or f.shape[1] != r:
                raise ValueError(
                    f"Factor {mode} has shape {f.shape}, core expects {r} columns"
                )

    @property
    def ndim(self) -> int:
        return self.core.ndim

    @property
    def ranks(self) -> Tuple[int, ...]:
        return self.core.shape

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(f.shape[0] for f in self.factors)
