from pydantic import BaseModel
from typing import List, Optional


class HealthResponse(BaseModel):
    status: str
    timestamp: str
    version: str


class DecompositionResponse(BaseModel):
    method: str
    rel_err: float
    wall_seconds: float
    ranks: List[int]
    factor_kinds: List[str]
    fiber_indices: List[Optional[List[int]]]


class BoundResponse(BaseModel):
    bound: float
    relative_bound: float
    phi: float
    hypothesis_violations: List[int]


class ProbabilityResponse(BaseModel):
    chi: float
    failure: float
