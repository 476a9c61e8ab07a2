import json
import math
import os
from pathlib import Path

import pytest

import regress_bench as rb

DATA = os.environ.get(
    "REGRESS_BENCH_DATA", str(Path(__file__).resolve().parents[2] / "data" / "insurance.csv")
)


@pytest.fixture(scope="module")
def data():
    return rb.read_csv(DATA)


def test_read_and_filter(data):
    assert data.n_rows == 1338
    filtered = rb.filter_threshold(data, "charges", 17500.0)
    assert len(filtered) == 1017
    assert max(filtered.numeric("charges")) <= 17500.0


def test_bad_csv_raises():
    with pytest.raises(rb.RegressBenchError, match="RowArity at row 1"):
        rb.parse_csv("age,sex,bmi,children,smoker,region,charges\n19,female\n")


def test_metrics():
    assert rb.r_squared([1, 2, 3, 4], [1.1, 1.9, 3.2, 3.8]) == pytest.approx(0.98)
    assert rb.mse([0, 0], [3, 4]) == 12.5
    assert rb.rmse([0, 0], [3, 4]) == pytest.approx(math.sqrt(12.5))


def test_split_and_folds_are_deterministic():
    train, test = rb.split_indices(1017, 0.8, 42)
    assert (len(train), len(test)) == (813, 204)
    assert sorted(train + test) == list(range(1017))
    assert rb.split_indices(1017, 0.8, 42) == (train, test)
    folds = rb.kfold_indices(1017, 10, 42)
    assert [len(f) for f in folds] == [102] * 7 + [101] * 3


def test_fit_predict_round_trip(data, tmp_path):
    x, y, names = rb.encode(rb.filter_threshold(data, "charges", 17500.0))
    assert len(names) == len(x[0])
    model = rb.fit("lr", x, y)
    assert model.kind == "linear_regression"
    pred = model.predict(x)
    assert rb.r_squared(y, pred) > 0.8
    path = tmp_path / "model.json"
    model.save(str(path))
    assert json.loads(path.read_text())["format_version"] == 1
    assert rb.load_model(str(path)).predict(x) == pred
    assert rb.model_from_json(model.to_json()).predict(x[:5]) == pred[:5]


def test_small_experiment(data):
    report = rb.run_experiment(data, "k = 3\ngbm.n_estimators = 10\nsvr.max_iters = 200\n", seed=7)
    assert report["counts"] == {"raw": 1338, "filtered": 1017, "train": 813, "test": 204}
    assert [m["kind"] for m in report["models"]] == ["gradient_boosting", "linear_regression", "svr"]
    assert report["config"]["seed"] == 7
    with pytest.raises(rb.RegressBenchError):
        rb.run_experiment(data, "k = 1")


def test_eda(data):
    eda = rb.run_eda(data)
    assert eda["smoker_separation"]["separated"] is True
    assert set(eda["post_filter"]) == {"region", "children", "sex", "smoker"}
