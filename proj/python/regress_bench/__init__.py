"""Python bindings for the regress_bench C++ core."""

import json

from ._core import (
    Dataset,
    FittedModel,
    RegressBenchError,
    encode,
    filter_threshold,
    fit,
    kfold_indices,
    load_model,
    mse,
    parse_csv,
    r_squared,
    read_csv,
    rmse,
    split_indices,
)
from . import _core

__all__ = [
    "Dataset",
    "FittedModel",
    "RegressBenchError",
    "encode",
    "filter_threshold",
    "fit",
    "kfold_indices",
    "load_model",
    "model_from_json",
    "mse",
    "parse_csv",
    "r_squared",
    "read_csv",
    "rmse",
    "run_eda",
    "run_experiment",
    "split_indices",
]


def run_experiment(dataset, config="", seed=42):
    """Run the full evaluation and return the report as a dict."""
    return json.loads(_core.run_experiment(dataset, config, seed))


def run_eda(dataset, threshold=17500.0):
    return json.loads(_core.run_eda(dataset, threshold))


def model_from_json(doc):
    if not isinstance(doc, str):
        doc = json.dumps(doc)
    return _core.model_from_json(doc)
