"""
Complete experiment run: table1, figure1 and tsweep, written as CSV
Usage:
  python scripts/run_full_pipeline.py [output_dir] [n_seeds]
"""

import sys
from pathlib import Path

from app.bench.records import emit_csv, mean_by_cell
from app.bench.runner import default_seeds, run_figure1, run_t_sweep, run_table1, speedup
from utils.logger import logger


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "./outputs")
    n_seeds = int(sys.argv[2]) if len(sys.argv) > 2 else 10
    seeds = default_seeds(n_seeds)

    print("\n" + "=" * 70)
    print("🚀 HYBRID TUCKER - FULL EXPERIMENT RUN")
    print("=" * 70 + "\n")

    # Step 1: table1
    logger.info("📊 Step 1: table1 sweep")
    table1 = run_table1(seeds=seeds, with_bound=True)
    emit_csv(table1, out / "table1.csv")
    print(f"✅ table1: {len(table1)} rows -> {out / 'table1.csv'}")
    for kind in ("B", "A"):
        for n in sorted({r.shape[0] for r in table1}):
            print(f"   {kind} n={n}: speedup {speedup(table1, kind, n):.1f}x")

    # Step 2: figure1
    logger.info("📈 Step 2: figure1 sweep")
    figure1 = run_figure1(seeds=seeds)
    emit_csv(figure1, out / "figure1.csv")
    emit_csv(mean_by_cell(figure1), out / "figure1_mean.csv")
    print(f"✅ figure1: {len(figure1)} rows -> {out / 'figure1.csv'}")

    # Step 3: t sweep
    logger.info("🔁 Step 3: t sweep")
    tsweep = run_t_sweep(seeds=seeds)
    emit_csv(tsweep, out / "tsweep.csv")
    print(f"✅ t sweep: {len(tsweep)} rows -> {out / 'tsweep.csv'}")

    print("\n" + "=" * 70)
    print("✅ DONE")
    print("=" * 70 + "\n")


if __name__ == "__main__":
    main()
