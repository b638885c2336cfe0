# app/bench/records.py

from __future__ import annotations

import csv
import os
from collections import defaultdict
from pathlib import Path
from statistics import fmean
from typing import Iterable, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from utils.logger import logger

CSV_HEADER = ["kind", "shape", "method", "ranks", "t", "p", "seed", "rel_err", "wall_seconds", "bound"]


class BenchRecord(BaseModel):
    """One experiment row."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["A", "B", "file"]
    shape: Tuple[int, ...]
    method: Literal["hosvd", "hoid", "hybrid", "rhybrid"]
    ranks: Tuple[int, ...]
    t: int = Field(..., ge=0)
    p: int = Field(..., ge=0)
    seed: int = Field(..., ge=0)
    rel_err: float = Field(..., ge=0.0)
    wall_seconds: float = Field(..., ge=0.0)
    bound: Optional[float] = None

    @property
    def cell(self) -> tuple:
        return (self.kind, self.shape, self.method, self.ranks, self.t, self.p)


def format_extents(values: Sequence[int]) -> str:
    return "x".join(str(int(v)) for v in values)


def parse_extents(text: str) -> Tuple[int, ...]:
    return tuple(int(v) for v in text.replace(",", "x").split("x") if v.strip())


def format_float(value: Optional[float]) -> str:
    """Shortest round-trip scientific notation; empty for a missing value."""
    if value is None:
        return ""
    return np.format_float_scientific(float(value), unique=True, trim="-")


def emit_csv(records: Iterable[BenchRecord], path: str | os.PathLike) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)

    rows = 0
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow([
                rec.kind,
                format_extents(rec.shape),
                rec.method,
                format_extents(rec.ranks),
                rec.t,
                rec.p,
                rec.seed,
                format_float(rec.rel_err),
                format_float(rec.wall_seconds),
                format_float(rec.bound),
            ])
            rows += 1

    logger.info(f"💾 Wrote {rows} records to {path}")
    return path


def read_csv(path: str | os.PathLike) -> List[BenchRecord]:
    with open(path, newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames != CSV_HEADER:
            raise ValueError(f"{path}: unexpected CSV header {reader.fieldnames}")
        return [
            BenchRecord(
                kind=row["kind"],
                shape=parse_extents(row["shape"]),
                method=row["method"],
                ranks=parse_extents(row["ranks"]),
                t=int(row["t"]),
                p=int(row["p"]),
                seed=int(row["seed"]),
                rel_err=float(row["rel_err"]),
                wall_seconds=float(row["wall_seconds"]),
                bound=float(row["bound"]) if row["bound"] else None,
            )
            for row in reader
        ]


def mean_by_cell(records: Iterable[BenchRecord]) -> List[BenchRecord]:
    """
    Average rel_err, wall time and bound over seeds for each
    (kind, shape, method, ranks, t, p) cell. The seed field keeps the
    cell's first seed; the bound is kept only if every row has one.
    """
    groups: dict[tuple, list[BenchRecord]] = defaultdict(list)
    for rec in records:
        groups[rec.cell].append(rec)

    out = []
    for rows in groups.values():
        bounds = [r.bound for r in rows]
        out.append(rows[0].model_copy(update={
            "rel_err": fmean(r.rel_err for r in rows),
            "wall_seconds": fmean(r.wall_seconds for r in rows),
            "bound": fmean(bounds) if all(b is not None for b in bounds) else None,
        }))
    return out
