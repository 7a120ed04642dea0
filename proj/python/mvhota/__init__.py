"""Multi-view point tracking evaluation (mvHOTA, HOTA, MOTA, IDF1, occlusion index)."""

import json
import os

from ._mvhota import (
    DatasetError,
    GeometryMismatchError,
    SynthConfig,
    hota,
    mv_hota,
    solve_assignment,
)
from . import _mvhota

__all__ = [
    "DatasetError",
    "GeometryMismatchError",
    "SynthConfig",
    "evaluate",
    "generate",
    "hota",
    "load",
    "mv_hota",
    "occlusion_index",
    "solve_assignment",
]


def _text(dataset):
    """Accepts a dataset dict, JSON text or a path."""
    if isinstance(dataset, dict):
        return json.dumps(dataset)
    if isinstance(dataset, os.PathLike) or (isinstance(dataset, str) and not dataset.lstrip().startswith("{")):
        with open(dataset, encoding="utf-8") as f:
            return f.read()
    return dataset


def load(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def evaluate(gt, pred, alpha=6.0, per_class=False, assign_ids=False, zero_tp_value=0.0):
    """Score predictions against ground truth; returns the report as a dict."""
    report = _mvhota.evaluate_json(_text(gt), _text(pred), alpha, per_class, assign_ids, zero_tp_value)
    return json.loads(report)


def occlusion_index(gt):
    """Occlusion index of a ground-truth dataset, or None when it has no points."""
    out = _mvhota.occlusion_json(_text(gt))
    return None if out is None else json.loads(out)


def generate(config=None, **overrides):
    """Synthetic (gt, pred) pair as dicts. Keyword overrides set SynthConfig fields."""
    config = config or SynthConfig()
    for key, value in overrides.items():
        if not hasattr(config, key):
            raise TypeError(f"unknown SynthConfig field {key!r}")
        setattr(config, key, value)
    gt, pred = _mvhota.synth(config)
    return json.loads(gt), json.loads(pred)
