"""
Inspect a binary tensor file
Usage:
  python scripts/check_tensor_file.py ./outputs/B_50x50x50.tnsr
"""

import sys

import numpy as np

from app.analysis.bounds import check_shape_hypothesis
from app.bench.tensor_io import read_tensor
from app.errors import TensorFileError
from app.tensor.ops import frobenius_norm


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else "./outputs/B_50x50x50.tnsr"

    print("\n" + "=" * 60)
    print("🧊 TENSOR FILE ANALYSIS")
    print("=" * 60 + "\n")

    try:
        tensor = read_tensor(path)
    except FileNotFoundError:
        print(f"❌ File not found: {path}")
        sys.exit(1)
    except TensorFileError as e:
        print(f"❌ {e}")
        sys.exit(2)

    data = tensor.data
    print(f"Path:       {path}")
    print(f"Shape:      {tensor.shape}")
    print(f"Entries:    {tensor.size}")
    print(f"Frobenius:  {frobenius_norm(tensor):.6e}")
    print(f"Min / Max:  {data.min():.6e} / {data.max():.6e}")
    print(f"First 5:    {np.array2string(tensor.flat[:5], precision=6)}")

    print("\n" + "=" * 60)
    print("DIAGNOSIS:")
    violations = check_shape_hypothesis(tensor.shape)
    if violations:
        print(f"⚠️ Modes {violations} violate n_i <= prod_(k!=i) n_k")
        print("✅ Suggestion: the error bound is still evaluated but not guaranteed")
    else:
        print("✅ Shape satisfies the bound hypothesis in every mode")
    print("=" * 60 + "\n")


if __name__ == "__main__":
    main()
