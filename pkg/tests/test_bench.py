import logging
import struct
from statistics import fmean

import numpy as np
import pytest
import yaml

from app.bench import (
    BenchRecord,
    emit_csv,
    generate_function_tensor,
    mean_by_cell,
    read_csv,
    read_model,
    read_tensor,
    run_figure1,
    run_t_sweep,
    run_table1,
    write_model,
    write_tensor,
)
from app.bench.records import CSV_HEADER, parse_extents
from app.bench.runner import default_seeds, speedup
from app.decompositions import SketchConfig, randomized_hybrid, reconstruct
from app.errors import TensorFileError
from app.kernels.rng import GENERATOR_NAME, GENERATOR_VERSION
from app.tensor import DenseTensor


def _record(**overrides):
    values = dict(
        kind="B", shape=(50, 50, 50), method="rhybrid", ranks=(5, 5, 5),
        t=1, p=5, seed=42, rel_err=1.0038e-4, wall_seconds=0.057, bound=None,
    )
    values.update(overrides)
    return BenchRecord(**values)


# ---- generators ----

def test_function_tensor_entries():
    A = generate_function_tensor("A", (3, 3, 3))
    B = generate_function_tensor("B", (3, 3, 3))
    assert A.data[0, 0, 0] == pytest.approx(1 / 3)
    assert B.data[0, 0, 0] == pytest.approx(1 / 6)
    assert B.data[1, 0, 2] == pytest.approx(1 / 13)


def test_function_tensor_symmetry():
    A = generate_function_tensor("A", (5, 5, 5)).data
    B = generate_function_tensor("B", (5, 5, 5)).data
    np.testing.assert_array_equal(A, np.transpose(A, (2, 0, 1)))
    assert not np.array_equal(B, np.transpose(B, (2, 0, 1)))


def test_function_tensor_any_order():
    T = generate_function_tensor("B", (2, 3, 2, 2))
    assert T.shape == (2, 3, 2, 2)
    assert T.data[1, 2, 1, 1] == pytest.approx(1 / (2 + 6 + 6 + 8))
    with pytest.raises(ValueError):
        generate_function_tensor("C", (3, 3))


# ---- tensor files ----

def test_tensor_file_roundtrip(tmp_path, random_tensor):
    T = random_tensor(7, 3, 5)
    path = write_tensor(tmp_path / "t.tnsr", T)
    assert read_tensor(path) == T


def test_tensor_file_layout(tmp_path):
    T = DenseTensor.from_flat(np.arange(1.0, 7.0), (2, 3))
    raw = write_tensor(tmp_path / "t.tnsr", T).read_bytes()
    assert raw[:4] == b"TNSR"
    assert struct.unpack_from("<II2Q", raw, 4) == (1, 2, 2, 3)
    np.testing.assert_array_equal(np.frombuffer(raw[28:], dtype="<f8"), np.arange(1.0, 7.0))


@pytest.mark.parametrize(
    "mutate, reason",
    [
        (lambda raw: b"XXXX" + raw[4:], "bad magic"),
        (lambda raw: raw[:4] + struct.pack("<I", 2) + raw[8:], "version"),
        (lambda raw: raw[:10], "truncated"),
        (lambda raw: raw[:-8], "truncated payload"),
        (lambda raw: raw + b"\x00" * 8, "trailing"),
    ],
)
def test_tensor_file_errors_name_the_path(tmp_path, mutate, reason):
    good = write_tensor(tmp_path / "good.tnsr", DenseTensor(np.ones((2, 2)))).read_bytes()
    bad = tmp_path / "bad.tnsr"
    bad.write_bytes(mutate(good))
    with pytest.raises(TensorFileError) as exc:
        read_tensor(bad)
    assert str(exc.value).startswith(str(bad))
    assert reason in str(exc.value)


def test_missing_tensor_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_tensor(tmp_path / "nope.tnsr")


def test_model_roundtrip(tmp_path):
    T = generate_function_tensor("A", (8, 7, 6))
    model = randomized_hybrid(T, SketchConfig(ranks=(3, 3, 2), fiber_modes=2, oversampling=2, seed=9))
    loaded = read_model(write_model(tmp_path / "model", model))
    assert reconstruct(loaded) == reconstruct(model)
    assert loaded.kinds == model.kinds
    assert loaded.fiber_indices == model.fiber_indices
    assert loaded.method == "rhybrid"


def test_model_manifest_records_generator(tmp_path, caplog):
    T = generate_function_tensor("B", (6, 6, 6))
    path = write_model(tmp_path / "model", randomized_hybrid(T, SketchConfig(ranks=(2, 2, 2), fiber_modes=1, oversampling=2, seed=3)))
    manifest = yaml.safe_load((path / "manifest.yaml").read_text())
    assert manifest["generator"] == {"name": GENERATOR_NAME, "version": GENERATOR_VERSION}

    manifest["generator"]["version"] = GENERATOR_VERSION + 1
    (path / "manifest.yaml").write_text(yaml.safe_dump(manifest))
    with caplog.at_level(logging.WARNING, logger="hybrid_tucker"):
        read_model(path)
    assert GENERATOR_NAME in caplog.text


def test_model_missing_manifest(tmp_path):
    with pytest.raises(TensorFileError):
        read_model(tmp_path)


# ---- CSV records ----

def test_empty_csv_is_header_only(tmp_path):
    path = emit_csv([], tmp_path / "empty.csv")
    assert path.read_text().strip() == ",".join(CSV_HEADER)
    assert read_csv(path) == []


def test_csv_roundtrip(tmp_path):
    records = [_record(), _record(method="hybrid", seed=43, rel_err=9.9927e-5, bound=3.25e-2)]
    assert read_csv(emit_csv(records, tmp_path / "r.csv")) == records


def test_csv_field_format(tmp_path):
    text = emit_csv([_record()], tmp_path / "r.csv").read_text().splitlines()
    assert text[1] == "B,50x50x50,rhybrid,5x5x5,1,5,42,1.0038e-04,5.7e-02,"


def test_parse_extents_accepts_commas():
    assert parse_extents("50x50x50") == (50, 50, 50)
    assert parse_extents("50,100") == (50, 100)


def test_mean_by_cell():
    rows = [_record(seed=s, rel_err=e, wall_seconds=w) for s, e, w in [(42, 1e-4, 0.1), (43, 3e-4, 0.3)]]
    rows.append(_record(method="hybrid", rel_err=2e-4))
    means = mean_by_cell(rows)
    assert len(means) == 2
    rh = next(r for r in means if r.method == "rhybrid")
    assert rh.rel_err == pytest.approx(fmean([1e-4, 3e-4]))
    assert rh.wall_seconds == pytest.approx(0.2)
    assert rh.seed == 42


def test_default_seeds():
    assert default_seeds(10) == tuple(range(42, 52))
    assert default_seeds() == (42,)


# ---- experiment runners ----

def test_table1_row_count():
    records = run_table1(sizes=(10, 12, 14), seeds=(42,))
    assert len(records) == 12
    assert {r.method for r in records} == {"hybrid", "rhybrid"}
    assert all(r.wall_seconds > 0 for r in records)


def test_table1_seeds_only_repeat_randomized_rows():
    records = run_table1(sizes=(10,), seeds=(42, 43, 44))
    assert sum(r.method == "hybrid" for r in records) == 2
    assert sum(r.method == "rhybrid" for r in records) == 6


def test_table1_is_deterministic():
    first = [r.rel_err for r in run_table1(sizes=(12,), seeds=(42,))]
    second = [r.rel_err for r in run_table1(sizes=(12,), seeds=(42,))]
    assert first == second


def test_table1_bound_column():
    records = run_table1(sizes=(20,), seeds=(42,), with_bound=True)
    for r in records:
        if r.method == "rhybrid":
            assert r.bound is not None and r.bound >= r.rel_err
        else:
            assert r.bound is None


def test_table1_accuracy_at_50():
    records = run_table1(sizes=(50,), seeds=(42,))
    hybrid_b = next(r for r in records if r.kind == "B" and r.method == "hybrid")
    assert hybrid_b.rel_err == pytest.approx(9.9927e-5, rel=0.10)


@pytest.mark.slow
def test_table1_accuracy_at_100():
    records = run_table1(sizes=(100,), seeds=(42,))
    rhybrid_a = next(r for r in records if r.kind == "A" and r.method == "rhybrid")
    assert 8.4108e-4 / 2 <= rhybrid_a.rel_err <= 8.4108e-4 * 2


@pytest.mark.slow
@pytest.mark.parametrize("n", [100, 150])
def test_table1_randomized_is_twenty_times_faster(n):
    records = run_table1(sizes=(n,), seeds=(42,), repeats=3)
    for kind in ("A", "B"):
        assert speedup(records, kind, n) >= 20.0


def test_figure1_record_counts():
    records = run_figure1(r_max=10, shape=(20, 20, 20), seeds=(42,))
    assert len(records) == 40
    assert sum(r.ranks == (1, 1, 1) for r in records) == 4


@pytest.mark.slow
def test_figure1_trends():
    records = mean_by_cell(run_figure1(seeds=default_seeds(10)))
    err = {(r.kind, r.method, r.ranks[0]): r.rel_err for r in records}
    for kind in ("A", "B"):
        for method in ("hybrid", "rhybrid"):
            assert err[(kind, method, 10)] < err[(kind, method, 1)]
            series = [err[(kind, method, r)] for r in range(1, 11)]
            inversions = sum(b > a for a, b in zip(series, series[1:]))
            assert inversions <= 1, f"{kind}/{method} errors rise more than once: {series}"
        for r in range(1, 11):
            assert 0.5 <= err[(kind, "rhybrid", r)] / err[(kind, "hybrid", r)] <= 2.0


def test_t_sweep_methods():
    records = run_t_sweep(shape=(6, 6, 6), ranks=(2, 2, 2), p=2, seeds=(42,))
    # (d + 1) values of t, one deterministic and one randomized row each, two kinds
    assert len(records) == 16
    by_t = {r.t: r.method for r in records if r.kind == "A" and r.method != "rhybrid"}
    assert by_t == {0: "hosvd", 1: "hybrid", 2: "hybrid", 3: "hoid"}


def test_speedup_requires_both_methods():
    with pytest.raises(ValueError):
        speedup([_record()], "B", 50)
