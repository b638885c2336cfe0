import math
import time
from typing import Dict

from app.bench.generators import generate_function_tensor
from app.decompositions.core import reconstruct
from app.decompositions.factory import decompose
from app.decompositions.model import SketchConfig
from app.tensor.ops import relative_error
from api.models.requests import DecompositionRequest
from utils.config_loader import config
from utils.logger import logger


class DecompositionService:
    """Business logic for decomposition requests"""

    def __init__(self):
        self.max_entries = int(config.get("api", "max_entries", default=8_000_000))

    def check_size(self, shape) -> None:
        entries = math.prod(shape)
        if entries > self.max_entries:
            raise ValueError(f"Tensor with {entries} entries exceeds the limit of {self.max_entries}")

    def run(self, request: DecompositionRequest) -> Dict:
        self.check_size(request.shape)
        logger.info(f"📝 Decomposition request: {request.method} {request.kind} {request.shape}")

        tensor = generate_function_tensor(request.kind, request.shape)
        cfg = SketchConfig(
            ranks=request.ranks,
            fiber_modes=request.t,
            oversampling=request.p,
            seed=request.seed,
        )

        start = time.perf_counter()
        model = decompose(request.method, tensor, cfg)
        seconds = time.perf_counter() - start

        return {
            "method": model.method,
            "rel_err": relative_error(tensor, reconstruct(model)),
            "wall_seconds": seconds,
            "ranks": list(model.ranks),
            "factor_kinds": [k.value for k in model.kinds],
            "fiber_indices": [list(idx) if idx is not None else None for idx in model.fiber_indices],
        }


_decomposition_service = None


def get_decomposition_service() -> DecompositionService:
    global _decomposition_service
    if _decomposition_service is None:
        _decomposition_service = DecompositionService()
    return _decomposition_service
