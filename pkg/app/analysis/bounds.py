# app/analysis/bounds.py

"""
Closed-form probabilistic error guarantees for randomized ID/SVD and the
randomized hybrid Tucker decomposition.

Probabilities are returned unclamped: a negative value means the guarantee is
vacuous for those parameters. Exponentials are evaluated in log space.
"""

from __future__ import annotations

import math
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.analysis.spectra import ModeSpectra
from app.decompositions.model import check_ranks
from utils.logger import logger


def _check_beta_gamma(beta: float, gamma: float) -> None:
    if not gamma > 1.0:
        raise ValueError(f"gamma must exceed 1, got {gamma}")
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")


def _failure_terms(q: int, m: int, beta: float, gamma: float) -> float:
    _check_beta_gamma(beta, gamma)
    if m < 1:
        raise ValueError(f"Need m >= 1, got {m}")
    g2 = gamma * gamma
    log_first = -0.5 * math.log(2.0 * math.pi * q) + q * (1.0 - math.log(q * beta))
    log_second = (
        -math.log(2.0 * (g2 - 1.0))
        - 0.5 * math.log(math.pi * m * g2)
        + m * (math.log(2.0 * g2) - (g2 - 1.0))
    )
    return math.exp(log_first) + math.exp(log_second)


def chi_failure_probability(k: int, l: int, m: int, beta: float, gamma: float) -> float:
    """Sum of the two subtracted terms of chi, i.e. 1 - chi without cancellation."""
    if not l >= k >= 0:
        raise ValueError(f"Need l >= k >= 0, got k={k}, l={l}")
    return _failure_terms(l - k + 1, m, beta, gamma)


def chi_probability(k: int, l: int, m: int, beta: float, gamma: float) -> float:
    """Lower bound on the probability that the randomized ID/SVD bounds hold."""
    return 1.0 - chi_failure_probability(k, l, m, beta, gamma)


def phi_probability(p: int, i_min: int, beta: float, gamma: float) -> float:
    """Success probability of the hybrid bound: chi with l - k = p and m = min extent."""
    if p < 0:
        raise ValueError(f"Oversampling must be non-negative, got {p}")
    if i_min < 1:
        raise ValueError(f"Minimum extent must be >= 1, got {i_min}")
    return 1.0 - _failure_terms(p + 1, i_min, beta, gamma)


def id_coefficient(k: int, l: int, m: int, n: int, beta: float, gamma: float) -> float:
    """Factor multiplying sigma_{k+1} in the spectral-norm bound of a randomized ID."""
    if n < k:
        raise ValueError(f"Need n >= k, got n={n}, k={k}")
    lm = float(l) * float(m)
    a = math.sqrt(2.0 * lm * beta**2 * gamma**2 + 1.0)
    b = math.sqrt(4.0 * k * (n - k) + 1.0)
    return a * (b + 1.0) + beta * gamma * math.sqrt(2.0 * lm) * b


def svd_coefficient(l: int, m: int, beta: float, gamma: float) -> float:
    """Factor multiplying sigma_{k+1} in the spectral-norm bound of a randomized SVD."""
    if l < 1 or m < 1:
        raise ValueError(f"Need l, m >= 1, got l={l}, m={m}")
    lm = float(l) * float(m)
    return 2.0 * math.sqrt(2.0 * lm * beta**2 * gamma**2 + 1.0) + 2.0 * math.sqrt(2.0 * lm) * beta * gamma


def check_shape_hypothesis(shape: Sequence[int]) -> List[int]:
    """1-based modes violating n_i <= prod_{k != i} n_k."""
    total = math.prod(int(n) for n in shape)
    return [
        mode
        for mode, n in enumerate(shape, start=1)
        if int(n) * int(n) > total
    ]


class BoundParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    beta: float = Field(..., gt=0.0)
    gamma: float
    p: int = Field(..., ge=0)
    shape: Tuple[int, ...] = Field(..., min_length=1)
    ranks: Tuple[int, ...]
    t: int = Field(..., ge=0)

    @field_validator("gamma")
    @classmethod
    def _gamma_above_one(cls, gamma: float) -> float:
        if not gamma > 1.0:
            raise ValueError(f"gamma must exceed 1, got {gamma}")
        return gamma

    @model_validator(mode="after")
    def _ranks_fit_shape(self) -> BoundParams:
        check_ranks(self.shape, self.ranks)
        if self.t > len(self.shape):
            raise ValueError(f"t={self.t} exceeds the tensor order {len(self.shape)}")
        return self

    @classmethod
    def from_gamma2(cls, gamma2: float, **kwargs) -> BoundParams:
        if not gamma2 > 1.0:
            raise ValueError(f"gamma^2 must exceed 1, got {gamma2}")
        return cls(gamma=math.sqrt(gamma2), **kwargs)

    @property
    def i_min(self) -> int:
        return min(self.shape)

    def phi(self) -> float:
        return phi_probability(self.p, self.i_min, self.beta, self.gamma)


def theorem1_bound(spectra: ModeSpectra, params: BoundParams) -> float:
    """
    Upper bound on ||A - A_hat||_F^2 for the randomized hybrid decomposition,
    holding with probability at least params.phi().
    """
    shape = params.shape
    if len(spectra.values) != len(shape):
        raise ValueError(f"Spectra cover {len(spectra.values)} modes, shape has {len(shape)}")

    violations = check_shape_hypothesis(shape)
    if violations:
        logger.warning(
            f"⚠️ Shape {shape} violates n_i <= prod_(k!=i) n_k in modes {violations}; "
            f"bound evaluated anyway"
        )

    total = math.prod(shape)
    bound = 0.0
    for mode, (n, r) in enumerate(zip(shape, params.ranks), start=1):
        sigma = spectra.trailing(mode, r)
        l = r + params.p
        if mode <= params.t:
            coeff = id_coefficient(r, l, n, total // n, params.beta, params.gamma)
        else:
            coeff = svd_coefficient(l, n, params.beta, params.gamma)
        bound += n * coeff**2 * sigma**2
    return float(bound)


def relative_bound(bound: float, tensor_norm: float) -> float:
    """Express a squared-Frobenius bound as a relative error."""
    if tensor_norm == 0.0:
        raise ValueError("Relative bound is undefined for a zero tensor")
    return math.sqrt(bound) / tensor_norm
