# app/bench/runner.py

"""Timed experiment runs behind the table1, figure1 and tsweep bench verbs."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from statistics import median
from typing import List, Optional, Sequence, Tuple

from app.analysis.bounds import BoundParams, relative_bound, theorem1_bound
from app.analysis.spectra import ModeSpectra
from app.bench.generators import generate_function_tensor
from app.bench.records import BenchRecord
from app.decompositions.core import reconstruct
from app.decompositions.factory import decompose
from app.decompositions.model import SketchConfig, TuckerModel
from app.tensor.dense import DenseTensor
from app.tensor.ops import frobenius_norm, relative_error
from utils.config_loader import config
from utils.logger import logger

KINDS = ("B", "A")
DETERMINISTIC = ("hosvd", "hoid", "hybrid")


def default_seeds(count: Optional[int] = None, master: Optional[int] = None) -> Tuple[int, ...]:
    """master, master + 1, ... (42..51 for the default ten-seed sweep)."""
    master = int(config.get("bench", "master_seed", default=42) if master is None else master)
    count = 1 if count is None else int(count)
    return tuple(range(master, master + count))


@dataclass(frozen=True)
class Cell:
    kind: str
    shape: Tuple[int, ...]
    method: str
    ranks: Tuple[int, ...]
    t: int
    p: int
    seed: int
    repeats: int = 1
    with_bound: bool = False


@lru_cache(maxsize=2)
def _function_tensor(kind: str, shape: Tuple[int, ...]) -> DenseTensor:
    return generate_function_tensor(kind, shape)


@lru_cache(maxsize=2)
def _spectra(kind: str, shape: Tuple[int, ...]) -> ModeSpectra:
    return ModeSpectra.from_tensor(_function_tensor(kind, shape))


def time_decomposition(method: str, tensor: DenseTensor, cfg: SketchConfig, repeats: int = 1) -> Tuple[TuckerModel, float]:
    """Run `repeats` times; return the last model and the median wall time."""
    times = []
    model = None
    for _ in range(max(1, repeats)):
        start = time.perf_counter()
        model = decompose(method, tensor, cfg)
        times.append(time.perf_counter() - start)
    return model, median(times)


def run_cell(cell: Cell) -> BenchRecord:
    tensor = _function_tensor(cell.kind, cell.shape)
    cfg = SketchConfig(ranks=cell.ranks, fiber_modes=cell.t, oversampling=cell.p, seed=cell.seed)

    model, seconds = time_decomposition(cell.method, tensor, cfg, cell.repeats)
    err = relative_error(tensor, reconstruct(model))

    bound = None
    if cell.with_bound and cell.method == "rhybrid":
        params = BoundParams.from_gamma2(
            float(config.get("analysis", "gamma2", default=5.0)),
            beta=float(config.get("analysis", "beta", default=0.75)),
            p=cell.p,
            shape=cell.shape,
            ranks=cell.ranks,
            t=cell.t,
        )
        bound = relative_bound(theorem1_bound(_spectra(cell.kind, cell.shape), params), frobenius_norm(tensor))

    logger.info(
        f"📊 {cell.kind} {cell.shape} {cell.method} ranks={cell.ranks} t={cell.t} "
        f"p={cell.p} seed={cell.seed}: err={err:.4e} time={seconds:.4f}s"
    )
    return BenchRecord(
        kind=cell.kind,
        shape=cell.shape,
        method=cell.method,
        ranks=cell.ranks,
        t=cell.t,
        p=cell.p,
        seed=cell.seed,
        rel_err=err,
        wall_seconds=seconds,
        bound=bound,
    )


def run_cells(cells: Sequence[Cell], jobs: int = 1) -> List[BenchRecord]:
    """Cells run one after another unless jobs > 1; a cell's timed region is never split."""
    if jobs <= 1:
        return [run_cell(c) for c in cells]
    logger.info(f"⚙️ Running {len(cells)} cells on {jobs} worker processes")
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_cell, cells))


def _cells_for(kind, shape, methods, ranks, t, p, seeds, repeats, with_bound) -> List[Cell]:
    cells = []
    for method in methods:
        method_seeds = seeds[:1] if method in DETERMINISTIC else seeds
        for seed in method_seeds:
            cells.append(Cell(kind, shape, method, ranks, t, p, seed, repeats, with_bound))
    return cells


def run_table1(
    sizes: Optional[Sequence[int]] = None,
    ranks: Optional[Sequence[int]] = None,
    p: Optional[int] = None,
    t: Optional[int] = None,
    seeds: Optional[Sequence[int]] = None,
    *,
    repeats: Optional[int] = None,
    jobs: Optional[int] = None,
    with_bound: bool = False,
) -> List[BenchRecord]:
    """Hybrid vs randomized hybrid on cubic A and B tensors of growing size."""
    sizes = tuple(sizes or config.get("bench", "table1", "sizes", default=[50, 100, 150]))
    ranks = tuple(ranks or config.get("bench", "table1", "ranks", default=[5, 5, 5]))
    p = int(config.get("bench", "table1", "oversampling", default=5) if p is None else p)
    t = int(config.get("bench", "table1", "fiber_modes", default=1) if t is None else t)
    seeds = tuple(seeds or default_seeds())
    repeats = int(config.get("bench", "repeats", default=1) if repeats is None else repeats)
    jobs = int(config.get("bench", "jobs", default=1) if jobs is None else jobs)

    logger.info(f"🚀 table1 sweep: sizes={sizes} ranks={ranks} p={p} t={t} seeds={seeds}")
    cells = []
    for n in sizes:
        shape = (int(n),) * len(ranks)
        for kind in KINDS:
            cells += _cells_for(kind, shape, ("hybrid", "rhybrid"), ranks, t, p, seeds, repeats, with_bound)
    return run_cells(cells, jobs)


def run_figure1(
    r_max: Optional[int] = None,
    p: Optional[int] = None,
    t: Optional[int] = None,
    shape: Optional[Sequence[int]] = None,
    seeds: Optional[Sequence[int]] = None,
    *,
    jobs: Optional[int] = None,
) -> List[BenchRecord]:
    """Relative error of both algorithms as the target rank (r, ..., r) grows from 1 to r_max."""
    r_max = int(config.get("bench", "figure1", "r_max", default=10) if r_max is None else r_max)
    p = int(config.get("bench", "figure1", "oversampling", default=5) if p is None else p)
    t = int(config.get("bench", "figure1", "fiber_modes", default=2) if t is None else t)
    shape = tuple(shape or config.get("bench", "figure1", "shape", default=[50, 50, 50]))
    seeds = tuple(seeds or default_seeds())
    jobs = int(config.get("bench", "jobs", default=1) if jobs is None else jobs)

    logger.info(f"🚀 figure1 sweep: r=1..{r_max} shape={shape} p={p} t={t} seeds={seeds}")
    cells = []
    for r in range(1, r_max + 1):
        ranks = (r,) * len(shape)
        for kind in KINDS:
            cells += _cells_for(kind, shape, ("hybrid", "rhybrid"), ranks, t, p, seeds, 1, False)
    return run_cells(cells, jobs)


def run_t_sweep(
    shape: Optional[Sequence[int]] = None,
    ranks: Optional[Sequence[int]] = None,
    p: Optional[int] = None,
    seeds: Optional[Sequence[int]] = None,
    *,
    jobs: Optional[int] = None,
) -> List[BenchRecord]:
    """
    Error as the number of fiber-preserving modes t runs from 0 (HOSVD) to d
    (HOID), deterministic and randomized.
    """
    shape = tuple(shape or config.get("bench", "tsweep", "shape", default=[30, 30, 30, 30]))
    ranks = tuple(ranks or config.get("bench", "tsweep", "ranks", default=[4] * len(shape)))
    p = int(config.get("bench", "tsweep", "oversampling", default=5) if p is None else p)
    seeds = tuple(seeds or default_seeds())
    jobs = int(config.get("bench", "jobs", default=1) if jobs is None else jobs)
    d = len(shape)

    logger.info(f"🚀 t sweep: shape={shape} ranks={ranks} p={p} seeds={seeds}")
    cells = []
    for kind in KINDS:
        for t in range(d + 1):
            deterministic = "hosvd" if t == 0 else "hoid" if t == d else "hybrid"
            cells += _cells_for(kind, shape, (deterministic, "rhybrid"), ranks, t, p, seeds, 1, False)
    return run_cells(cells, jobs)


def speedup(records: Sequence[BenchRecord], kind: str, n: int) -> float:
    """Median hybrid time over median rhybrid time for one kind and cubic size."""
    def times(method):
        return [r.wall_seconds for r in records if r.kind == kind and r.shape[0] == n and r.method == method]

    slow, fast = times("hybrid"), times("rhybrid")
    if not slow or not fast:
        raise ValueError(f"No hybrid/rhybrid timings for kind={kind} n={n}")
    return median(slow) / median(fast) if median(fast) > 0 else math.inf
