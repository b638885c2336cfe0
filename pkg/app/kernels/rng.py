# app/kernels/rng.py

"""
Seeded, stream-separated Gaussian test matrices.

Draws come from numpy's Philox4x64-10 counter-based bit generator keyed by
SeedSequence(seed, spawn_key=(stream,)), with normals from
Generator.standard_normal. The same (seed, stream) gives the same draws on
any platform numpy supports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from app.tensor.dense import Matrix

GENERATOR_NAME = "philox4x64-10"
GENERATOR_VERSION = 1


@dataclass(frozen=True)
class SeededRng:
    seed: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")
        if int(self.stream) < 0:
            raise ValueError(f"Stream id must be non-negative, got {self.stream}")

    def substream(self, stream: int) -> SeededRng:
        return SeededRng(self.seed, stream)

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(int(self.seed), spawn_key=(int(self.stream),))
        return np.random.Generator(np.random.Philox(seq))


def gaussian_matrix(rows: int, cols: int, rng: SeededRng) -> Matrix:
    """rows x cols i.i.d. N(0, 1) matrix, filled column by column."""
    if rows < 1 or cols < 1:
        raise ValueError(f"Gaussian matrix needs rows, cols >= 1, got {rows}x{cols}")
    draws = rng.generator().standard_normal((cols, rows))
    return draws.T
