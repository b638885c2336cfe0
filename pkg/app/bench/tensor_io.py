# app/bench/tensor_io.py

"""
Binary tensor files and on-disk Tucker models.

Tensor file layout (little-endian):
  4 bytes   magic b"TNSR"
  u32       format version (1)
  u32       ndims
  u64 x d   extents
  f64 x N   entries, column-major, N = prod(extents)

A model is a directory holding manifest.yaml plus core.tnsr and
factor_<k>.tnsr for k = 1..d.
"""

from __future__ import annotations

import os
import struct
from pathlib import Path

import numpy as np
import yaml

from app.decompositions.model import FactorKind, SketchConfig, TuckerModel
from app.errors import TensorFileError
from app.kernels.rng import GENERATOR_NAME, GENERATOR_VERSION
from app.tensor.dense import DenseTensor, Matrix
from utils.logger import logger

MAGIC = b"TNSR"
FORMAT_VERSION = 1
MANIFEST_NAME = "manifest.yaml"
_HEADER = struct.Struct("<4sII")
_MAX_ENTRIES = 2**62 // 8


def _encode(data: np.ndarray) -> bytes:
    header = _HEADER.pack(MAGIC, FORMAT_VERSION, data.ndim)
    extents = struct.pack(f"<{data.ndim}Q", *data.shape)
    return header + extents + data.astype("<f8", copy=False).tobytes(order="F")


def _decode(raw: bytes, path) -> np.ndarray:
    if len(raw) < _HEADER.size:
        raise TensorFileError(path, "truncated header")
    magic, version, ndims = _HEADER.unpack_from(raw, 0)
    if magic != MAGIC:
        raise TensorFileError(path, f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != FORMAT_VERSION:
        raise TensorFileError(path, f"unsupported format version {version}")
    if ndims < 1:
        raise TensorFileError(path, "tensor must have at least one mode")

    offset = _HEADER.size
    if len(raw) < offset + 8 * ndims:
        raise TensorFileError(path, "truncated extents")
    extents = struct.unpack_from(f"<{ndims}Q", raw, offset)
    offset += 8 * ndims

    count = 1
    for n in extents:
        if n < 1:
            raise TensorFileError(path, f"invalid extent {n}")
        count *= n
        if count > _MAX_ENTRIES:
            raise TensorFileError(path, f"extents {extents} overflow the addressable size")

    payload = len(raw) - offset
    if payload < 8 * count:
        raise TensorFileError(path, f"truncated payload: {payload} of {8 * count} bytes")
    if payload > 8 * count:
        raise TensorFileError(path, f"{payload - 8 * count} trailing bytes after payload")

    flat = np.frombuffer(raw, dtype="<f8", count=count, offset=offset)
    return np.reshape(flat.astype(np.float64), extents, order="F")


def write_tensor(path: str | os.PathLike, tensor: DenseTensor) -> Path:
    path = Path(path)
    path.write_bytes(_encode(tensor.data))
    logger.debug(f"Wrote tensor {tensor.shape} to {path}")
    return path


def read_tensor(path: str | os.PathLike) -> DenseTensor:
    path = Path(path)
    if not path.exists():
        logger.error(f"File not found: {path}")
        raise FileNotFoundError(f"{path} does not exist.")
    data = _decode(path.read_bytes(), path)
    try:
        return DenseTensor(data, copy=False)
    except ValueError as e:
        raise TensorFileError(path, str(e)) from e


def _write_matrix(path: Path, matrix: Matrix) -> None:
    path.write_bytes(_encode(np.asarray(matrix, dtype=np.float64)))


def _read_matrix(path: Path) -> Matrix:
    if not path.exists():
        raise TensorFileError(path, "missing factor file")
    data = _decode(path.read_bytes(), path)
    if data.ndim != 2:
        raise TensorFileError(path, f"expected a matrix, found {data.ndim} modes")
    return data


def write_model(directory: str | os.PathLike, model: TuckerModel) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    manifest = {
        "format_version": FORMAT_VERSION,
        "method": model.method,
        "shape": list(model.shape),
        "ranks": list(model.config.ranks),
        "fiber_modes": model.config.fiber_modes,
        "oversampling": model.config.oversampling,
        "seed": model.config.seed,
        "generator": {"name": GENERATOR_NAME, "version": GENERATOR_VERSION},
        "factor_kinds": [k.value for k in model.kinds],
        "fiber_indices": [list(idx) if idx is not None else None for idx in model.fiber_indices],
    }
    with open(directory / MANIFEST_NAME, "w") as f:
        yaml.safe_dump(manifest, f, sort_keys=False)

    write_tensor(directory / "core.tnsr", model.core)
    for mode, factor in enumerate(model.factors, start=1):
        _write_matrix(directory / f"factor_{mode}.tnsr", factor)

    logger.info(f"💾 Saved {model.method} model {model.shape} -> {model.ranks} to {directory}")
    return directory


def read_model(directory: str | os.PathLike) -> TuckerModel:
    directory = Path(directory)
    manifest_path = directory / MANIFEST_NAME
    if not manifest_path.exists():
        raise TensorFileError(manifest_path, "missing model manifest")

    with open(manifest_path) as f:
        manifest = yaml.safe_load(f) or {}
    if manifest.get("format_version") != FORMAT_VERSION:
        raise TensorFileError(manifest_path, f"unsupported format version {manifest.get('format_version')}")

    generator = manifest.get("generator") or {}
    if not isinstance(generator, dict):
        raise TensorFileError(manifest_path, "invalid manifest: generator must be a mapping")
    if generator and (generator.get("name"), generator.get("version")) != (GENERATOR_NAME, GENERATOR_VERSION):
        logger.warning(
            f"⚠️ Model in {directory} was sketched with {generator.get('name')} v{generator.get('version')}; "
            f"rerunning its seed here uses {GENERATOR_NAME} v{GENERATOR_VERSION}"
        )

    try:
        cfg = SketchConfig(
            ranks=tuple(manifest["ranks"]),
            fiber_modes=int(manifest["fiber_modes"]),
            oversampling=int(manifest["oversampling"]),
            seed=int(manifest["seed"]),
        )
        kinds = tuple(FactorKind(k) for k in manifest["factor_kinds"])
        indices = tuple(
            tuple(int(i) for i in idx) if idx is not None else None
            for idx in manifest["fiber_indices"]
        )
        core = read_tensor(directory / "core.tnsr")
        factors = tuple(
            _read_matrix(directory / f"factor_{mode}.tnsr") for mode in range(1, core.ndim + 1)
        )
        return TuckerModel(
            core=core,
            factors=factors,
            kinds=kinds,
            fiber_indices=indices,
            config=cfg,
            method=str(manifest["method"]),
        )
    except TensorFileError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise TensorFileError(manifest_path, f"invalid manifest: {e}") from e
