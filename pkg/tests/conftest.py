import numpy as np
import pytest

from app.tensor import DenseTensor, multi_mode_mul
from utils.config_loader import config


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def random_tensor(rng):
    def make(*shape):
        return DenseTensor(rng.standard_normal(shape))
    return make


@pytest.fixture
def low_rank_tensor(rng):
    """Tensor of exact multilinear rank `ranks` built from random factors."""
    def make(shape, ranks):
        core = rng.standard_normal(ranks)
        factors = [rng.standard_normal((n, r)) for n, r in zip(shape, ranks)]
        return multi_mode_mul(DenseTensor(core), factors)
    return make


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    """Point bench.output_dir at a temporary directory."""
    monkeypatch.setenv("HYBRID_TUCKER_OUTPUT_DIR", str(tmp_path))
    config.reload()
    yield tmp_path
    monkeypatch.delenv("HYBRID_TUCKER_OUTPUT_DIR")
    config.reload()
