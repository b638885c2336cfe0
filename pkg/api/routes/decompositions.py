from fastapi import APIRouter, HTTPException
from api.models.requests import DecompositionRequest
from api.models.responses import DecompositionResponse
from api.services.decomposition_service import get_decomposition_service
from utils.logger import logger

router = APIRouter(prefix="/decompositions", tags=["Decompositions"])


@router.post("", response_model=DecompositionResponse)
def run_decomposition(request: DecompositionRequest):
    try:
        result = get_decomposition_service().run(request)
        return DecompositionResponse(**result)

    except ValueError as e:
        logger.warning(f"⚠️ Rejected decomposition request: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"❌ Decomposition failed: {e}")
        raise HTTPException(status_code=500, detail=str(e))
