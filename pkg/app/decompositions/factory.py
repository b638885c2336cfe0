# app/decompositions/factory.py

from app.decompositions.deterministic import hoid, hosvd, hybrid
from app.decompositions.model import SketchConfig, TuckerModel
from app.decompositions.randomized import randomized_hybrid
from app.tensor.dense import DenseTensor
from utils.logger import logger

METHODS = ("hosvd", "hoid", "hybrid", "rhybrid")


class DecompositionFactory:
    """Run a decomposition selected by name"""

    @staticmethod
    def run(method: str, tensor: DenseTensor, cfg: SketchConfig) -> TuckerModel:
        logger.debug(f"Dispatching method={method}")

        if method == "hosvd":
            return hosvd(tensor, cfg.ranks)
        elif method == "hoid":
            return hoid(tensor, cfg.ranks)
        elif method == "hybrid":
            return hybrid(tensor, cfg.ranks, cfg.fiber_modes)
        elif method == "rhybrid":
            return randomized_hybrid(tensor, cfg)
        else:
            raise ValueError(f"❌ Unknown decomposition method: {method}")


def decompose(method: str, tensor: DenseTensor, cfg: SketchConfig) -> TuckerModel:
    """Convenience wrapper around DecompositionFactory.run"""
    return DecompositionFactory.run(method, tensor, cfg)
