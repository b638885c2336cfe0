from app.decompositions.core import compute_core, contraction_factor, projector, reconstruct
from app.decompositions.deterministic import hoid, hosvd, hybrid
from app.decompositions.factory import METHODS, DecompositionFactory, decompose
from app.decompositions.model import FactorKind, SketchConfig, TuckerModel, check_ranks
from app.decompositions.randomized import randomized_hybrid

__all__ = [
    "METHODS",
    "DecompositionFactory",
    "FactorKind",
    "SketchConfig",
    "TuckerModel",
    "check_ranks",
    "compute_core",
    "contraction_factor",
    "decompose",
    "hoid",
    "hosvd",
    "hybrid",
    "projector",
    "randomized_hybrid",
    "reconstruct",
]
