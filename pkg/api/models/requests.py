from pydantic import BaseModel, ConfigDict, Field
from typing import Literal, Optional, Tuple


class DecompositionRequest(BaseModel):
    kind: Literal["A", "B"]
    shape: Tuple[int, ...] = Field(..., min_length=1, max_length=8)
    method: Literal["hosvd", "hoid", "hybrid", "rhybrid"] = "rhybrid"
    ranks: Tuple[int, ...] = Field(..., min_length=1, max_length=8)
    t: int = Field(1, ge=0)
    p: int = Field(5, ge=0)
    seed: int = Field(42, ge=0)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "kind": "B",
                "shape": [50, 50, 50],
                "method": "rhybrid",
                "ranks": [5, 5, 5],
                "t": 1,
                "p": 5,
                "seed": 42,
            }
        }
    )


class BoundRequest(BaseModel):
    kind: Literal["A", "B"]
    shape: Tuple[int, ...] = Field(..., min_length=1, max_length=8)
    ranks: Tuple[int, ...] = Field(..., min_length=1, max_length=8)
    t: int = Field(1, ge=0)
    p: int = Field(5, ge=0)
    beta: Optional[float] = Field(None, gt=0)
    gamma2: Optional[float] = Field(None, gt=1)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "kind": "A",
                "shape": [20, 20, 20],
                "ranks": [5, 5, 5],
                "t": 1,
                "p": 5,
                "beta": 0.75,
                "gamma2": 5.0,
            }
        }
    )
