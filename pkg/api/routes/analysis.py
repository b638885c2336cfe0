from typing import Optional

from fastapi import APIRouter, HTTPException, Query
from api.models.requests import BoundRequest
from api.models.responses import BoundResponse, ProbabilityResponse
from api.services.analysis_service import get_analysis_service
from utils.logger import logger

router = APIRouter(prefix="/analysis", tags=["Analysis"])


@router.post("/bound", response_model=BoundResponse)
def compute_bound(request: BoundRequest):
    try:
        return BoundResponse(**get_analysis_service().bound(request))

    except ValueError as e:
        logger.warning(f"⚠️ Rejected bound request: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"❌ Bound evaluation failed: {e}")
        raise HTTPException(status_code=500, detail=str(e))


@router.get("/probability", response_model=ProbabilityResponse)
def success_probability(
    k: int = Query(..., ge=0),
    l: int = Query(..., ge=1),
    m: int = Query(..., ge=1),
    beta: Optional[float] = Query(None, gt=0),
    gamma2: Optional[float] = Query(None, gt=1),
):
    try:
        return ProbabilityResponse(**get_analysis_service().probability(k, l, m, beta, gamma2))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
