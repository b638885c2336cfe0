import math
from typing import Dict, Optional

from app.analysis.bounds import (
    BoundParams,
    check_shape_hypothesis,
    chi_failure_probability,
    relative_bound,
    theorem1_bound,
)
from app.analysis.spectra import ModeSpectra
from app.bench.generators import generate_function_tensor
from app.tensor.ops import frobenius_norm
from api.models.requests import BoundRequest
from api.services.decomposition_service import get_decomposition_service
from utils.config_loader import config
from utils.logger import logger


class AnalysisService:
    def __init__(self):
        self.beta = float(config.get("analysis", "beta", default=0.75))
        self.gamma2 = float(config.get("analysis", "gamma2", default=5.0))

    def bound(self, request: BoundRequest) -> Dict:
        get_decomposition_service().check_size(request.shape)
        logger.info(f"📐 Bound request: {request.kind} {request.shape} ranks={request.ranks}")

        params = BoundParams.from_gamma2(
            self.gamma2 if request.gamma2 is None else request.gamma2,
            beta=self.beta if request.beta is None else request.beta,
            p=request.p,
            shape=request.shape,
            ranks=request.ranks,
            t=request.t,
        )
        tensor = generate_function_tensor(request.kind, request.shape)
        bound = theorem1_bound(ModeSpectra.from_tensor(tensor), params)
        return {
            "bound": bound,
            "relative_bound": relative_bound(bound, frobenius_norm(tensor)),
            "phi": params.phi(),
            "hypothesis_violations": check_shape_hypothesis(request.shape),
        }

    def probability(self, k: int, l: int, m: int, beta: Optional[float], gamma2: Optional[float]) -> Dict:
        gamma2 = self.gamma2 if gamma2 is None else gamma2
        beta = self.beta if beta is None else beta
        if gamma2 <= 1:
            raise ValueError(f"gamma^2 must exceed 1, got {gamma2}")
        failure = chi_failure_probability(k, l, m, beta, math.sqrt(gamma2))
        return {"chi": 1.0 - failure, "failure": failure}


_analysis_service = None


def get_analysis_service() -> AnalysisService:
    global _analysis_service
    if _analysis_service is None:
        _analysis_service = AnalysisService()
    return _analysis_service
