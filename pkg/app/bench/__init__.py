from app.bench.generators import generate_function_tensor
from app.bench.records import BenchRecord, emit_csv, mean_by_cell, read_csv
from app.bench.runner import run_figure1, run_t_sweep, run_table1
from app.bench.tensor_io import read_model, read_tensor, write_model, write_tensor

__all__ = [
    "BenchRecord",
    "emit_csv",
    "generate_function_tensor",
    "mean_by_cell",
    "read_csv",
    "read_model",
    "read_tensor",
    "run_figure1",
    "run_t_sweep",
    "run_table1",
    "write_model",
    "write_tensor",
]
