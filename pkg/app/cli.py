# app/cli.py

"""
Command-line entry point.

  hybrid-tucker generate --kind A --shape 50x50x50 --out a50.tnsr
  hybrid-tucker decompose --kind B --shape 50x50x50 --method rhybrid --ranks 5x5x5 --t 1 --p 5
  hybrid-tucker bench table1 --out results/table1.csv
  hybrid-tucker bench figure1 --n-seeds 10 --out results/figure1.csv
  hybrid-tucker bench tsweep --out results/tsweep.csv
  hybrid-tucker bound --kind A --shape 20x20x20 --ranks 5x5x5 --t 1 --p 5
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import List, Optional

from app.analysis.bounds import BoundParams, check_shape_hypothesis, relative_bound, theorem1_bound
from app.analysis.spectra import ModeSpectra
from app.bench.generators import generate_function_tensor
from app.bench.records import BenchRecord, emit_csv, mean_by_cell, parse_extents
from app.bench.runner import default_seeds, run_figure1, run_t_sweep, run_table1
from app.bench.tensor_io import read_tensor, write_model, write_tensor
from app.decompositions.core import reconstruct
from app.decompositions.factory import METHODS, decompose
from app.decompositions.model import SketchConfig
from app.tensor.dense import DenseTensor
from app.tensor.ops import frobenius_norm, relative_error
from utils.config_loader import config
from utils.logger import logger


def _output_dir() -> Path:
    return Path(config.get("bench", "output_dir", default="./results"))


def _load_input(args) -> tuple[str, DenseTensor]:
    if args.input:
        return "file", read_tensor(args.input)
    if not args.kind or not args.shape:
        raise ValueError("Provide --in FILE or both --kind and --shape")
    return args.kind, generate_function_tensor(args.kind, args.shape)


def _add_tensor_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="input", help="Tensor file to read")
    parser.add_argument("--kind", choices=["A", "B"], help="Function tensor to generate")
    parser.add_argument("--shape", type=parse_extents, help="Extents, e.g. 50x50x50")


def _add_sketch_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ranks", type=parse_extents, help="Target multilinear rank, e.g. 5x5x5")
    parser.add_argument("--t", type=int, help="Number of leading fiber-sampled modes")
    parser.add_argument("--p", type=int, help="Oversampling")
    parser.add_argument("--seed", type=int, help="Master seed")


def cmd_generate(args) -> int:
    tensor = generate_function_tensor(args.kind, args.shape)
    write_tensor(args.out, tensor)
    print(f"{args.out}: {args.kind} tensor of shape {'x'.join(map(str, tensor.shape))}")
    return 0


def cmd_decompose(args) -> int:
    kind, tensor = _load_input(args)
    cfg = SketchConfig.from_config(
        ranks=args.ranks, fiber_modes=args.t, oversampling=args.p, seed=args.seed
    )

    start = time.perf_counter()
    model = decompose(args.method, tensor, cfg)
    seconds = time.perf_counter() - start
    err = relative_error(tensor, reconstruct(model))

    record = BenchRecord(
        kind=kind,
        shape=tensor.shape,
        method=args.method,
        ranks=model.ranks,
        t=model.config.fiber_modes,
        p=cfg.oversampling,
        seed=cfg.seed,
        rel_err=err,
        wall_seconds=seconds,
    )
    if args.save_model:
        write_model(args.save_model, model)
    if args.out:
        emit_csv([record], args.out)

    print(f"method={args.method} rel_err={err:.6e} wall_seconds={seconds:.6f}")
    for mode, idx in enumerate(model.fiber_indices, start=1):
        if idx is not None:
            print(f"mode {mode} fibers: {list(idx)}")
    return 0


def _write_records(records: List[BenchRecord], out: Optional[str], name: str) -> Path:
    path = Path(out) if out else _output_dir() / f"{name}.csv"
    emit_csv(records, path)
    if len({r.seed for r in records}) > 1:
        emit_csv(mean_by_cell(records), path.with_name(f"{path.stem}_mean.csv"))
    print(f"{len(records)} records -> {path}")
    return path


def cmd_bench(args) -> int:
    seeds = default_seeds(args.n_seeds, args.seed)
    if args.experiment == "table1":
        records = run_table1(
            sizes=args.sizes,
            ranks=args.ranks,
            p=args.p,
            t=args.t,
            seeds=seeds,
            repeats=args.repeats,
            jobs=args.jobs,
            with_bound=args.with_bound,
        )
    elif args.experiment == "figure1":
        records = run_figure1(
            r_max=args.r_max, p=args.p, t=args.t, shape=args.shape, seeds=seeds, jobs=args.jobs
        )
    else:
        records = run_t_sweep(
            shape=args.shape, ranks=args.ranks, p=args.p, seeds=seeds, jobs=args.jobs
        )
    _write_records(records, args.out, args.experiment)
    return 0


def cmd_bound(args) -> int:
    kind, tensor = _load_input(args)
    cfg = SketchConfig.from_config(
        ranks=args.ranks, fiber_modes=args.t, oversampling=args.p, seed=args.seed
    )
    beta = args.beta if args.beta is not None else float(config.get("analysis", "beta", default=0.75))
    gamma2 = args.gamma2 if args.gamma2 is not None else float(config.get("analysis", "gamma2", default=5.0))
    params = BoundParams.from_gamma2(
        gamma2, beta=beta, p=cfg.oversampling, shape=tensor.shape, ranks=cfg.ranks, t=cfg.fiber_modes
    )

    bound = theorem1_bound(ModeSpectra.from_tensor(tensor), params)
    norm = frobenius_norm(tensor)
    model = decompose("rhybrid", tensor, cfg)
    observed = relative_error(tensor, reconstruct(model)) * norm

    print(f"tensor={kind} shape={'x'.join(map(str, tensor.shape))} ranks={cfg.ranks} t={cfg.fiber_modes} p={cfg.oversampling}")
    print(f"bound (squared Frobenius)  = {bound:.6e}")
    print(f"bound (relative)           = {relative_bound(bound, norm):.6e}")
    print(f"observed (squared, seed {cfg.seed}) = {observed ** 2:.6e}")
    print(f"phi                        = {params.phi():.17g}")
    violations = check_shape_hypothesis(tensor.shape)
    print(f"hypothesis violations      = {violations if violations else 'none'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hybrid-tucker", description="Hybrid CUR-type Tucker decompositions")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="Write a function tensor to a file")
    gen.add_argument("--kind", choices=["A", "B"], required=True)
    gen.add_argument("--shape", type=parse_extents, required=True)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_generate)

    dec = sub.add_parser("decompose", help="Decompose one tensor and report its error")
    _add_tensor_source(dec)
    _add_sketch_options(dec)
    dec.add_argument("--method", choices=METHODS, default="rhybrid")
    dec.add_argument("--save-model", help="Directory to store the model in")
    dec.add_argument("--out", help="CSV file for the result record")
    dec.set_defaults(func=cmd_decompose)

    bench = sub.add_parser("bench", help="Run an experiment sweep")
    bench.add_argument("experiment", choices=["table1", "figure1", "tsweep"])
    _add_sketch_options(bench)
    bench.add_argument("--sizes", type=parse_extents, help="Cube sizes for table1, e.g. 50,100")
    bench.add_argument("--shape", type=parse_extents, help="Tensor shape for figure1/tsweep")
    bench.add_argument("--r-max", type=int, help="Largest rank for figure1")
    bench.add_argument("--n-seeds", type=int, default=1, help="Seeds master..master+n-1")
    bench.add_argument("--repeats", type=int, help="Timed runs per cell (median reported)")
    bench.add_argument("--jobs", type=int, help="Worker processes across cells")
    bench.add_argument("--with-bound", action="store_true", help="Add the relative error bound to randomized rows")
    bench.add_argument("--out", help="CSV output path")
    bench.set_defaults(func=cmd_bench)

    bnd = sub.add_parser("bound", help="Evaluate the probabilistic error bound")
    _add_tensor_source(bnd)
    _add_sketch_options(bnd)
    bnd.add_argument("--beta", type=float)
    bnd.add_argument("--gamma2", type=float)
    bnd.set_defaults(func=cmd_bound)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as e:
        logger.debug(f"❌ {args.command} failed: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
