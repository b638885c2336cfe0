from app.analysis.bounds import (
    BoundParams,
    check_shape_hypothesis,
    chi_failure_probability,
    chi_probability,
    id_coefficient,
    phi_probability,
    relative_bound,
    svd_coefficient,
    theorem1_bound,
)
from app.analysis.spectra import ModeSpectra, mode_singular_values

__all__ = [
    "BoundParams",
    "ModeSpectra",
    "check_shape_hypothesis",
    "chi_failure_probability",
    "chi_probability",
    "id_coefficient",
    "mode_singular_values",
    "phi_probability",
    "relative_bound",
    "svd_coefficient",
    "theorem1_bound",
]
