import pytest

from app.bench import read_csv, read_model, read_tensor
from app.cli import main


def test_generate_writes_tensor_file(tmp_path, capsys):
    out = tmp_path / "b.tnsr"
    assert main(["generate", "--kind", "B", "--shape", "4x5x6", "--out", str(out)]) == 0
    assert read_tensor(out).shape == (4, 5, 6)
    assert "4x5x6" in capsys.readouterr().out


def test_decompose_from_file(tmp_path, capsys):
    src = tmp_path / "a.tnsr"
    main(["generate", "--kind", "A", "--shape", "10x10x10", "--out", str(src)])
    csv_path, model_dir = tmp_path / "r.csv", tmp_path / "model"

    code = main([
        "decompose", "--in", str(src), "--method", "hybrid", "--ranks", "3x3x3", "--t", "2",
        "--out", str(csv_path), "--save-model", str(model_dir),
    ])

    assert code == 0
    [record] = read_csv(csv_path)
    assert record.kind == "file" and record.method == "hybrid" and record.t == 2
    assert read_model(model_dir).ranks == (3, 3, 3)
    assert "mode 2 fibers" in capsys.readouterr().out


def test_decompose_is_deterministic(tmp_path):
    args = ["decompose", "--kind", "B", "--shape", "12x12x12", "--ranks", "4x4x4", "--t", "1", "--p", "3", "--seed", "7"]
    main(args + ["--out", str(tmp_path / "one.csv")])
    main(args + ["--out", str(tmp_path / "two.csv")])
    assert read_csv(tmp_path / "one.csv")[0].rel_err == read_csv(tmp_path / "two.csv")[0].rel_err


def test_bench_table1_with_seeds(tmp_path):
    out = tmp_path / "table1.csv"
    code = main(["bench", "table1", "--sizes", "10,12", "--n-seeds", "2", "--with-bound", "--out", str(out)])
    assert code == 0
    records = read_csv(out)
    assert len(records) == 2 * 2 * (1 + 2)
    assert len(read_csv(tmp_path / "table1_mean.csv")) == 2 * 2 * 2


def test_bench_defaults_to_output_dir(output_dir):
    assert main(["bench", "tsweep", "--shape", "5x5x5", "--ranks", "2x2x2", "--p", "1"]) == 0
    assert len(read_csv(output_dir / "tsweep.csv")) == 16


def test_bound_report(capsys):
    code = main(["bound", "--kind", "A", "--shape", "20x20x20", "--ranks", "5x5x5", "--t", "1", "--p", "5"])
    out = capsys.readouterr().out
    assert code == 0
    assert "bound (relative)" in out
    assert "hypothesis violations      = none" in out


def test_errors_give_one_line_diagnostic(capsys):
    assert main(["decompose", "--ranks", "2x2x2"]) == 1
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and err[0].startswith("error:")


def test_bad_rank_is_reported(capsys):
    assert main(["decompose", "--kind", "A", "--shape", "4x4x4", "--ranks", "9x2x2"]) == 1
    assert "error:" in capsys.readouterr().err


def test_unknown_verb_exits_nonzero():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code != 0
