"""Python access to the subordlab C++ core."""

import json

from ._core import (
    bb_operator,
    bb_solve,
    boundary_curve,
    case_ids,
    dominant_names,
    dominant_series,
    evaluate_dominant,
    odl_closed_form,
)
from . import _core

__all__ = [
    "bb_operator",
    "bb_solve",
    "boundary_curve",
    "case_ids",
    "dominant_names",
    "dominant_series",
    "evaluate_dominant",
    "falsify",
    "is_subordinate",
    "odl_closed_form",
    "verify",
]


def is_subordinate(p, dominant, path="auto", tolerance=1e-4, samples=1024, **params):
    """Verdict dict for p < h; p is a list of Taylor coefficients."""
    return json.loads(_core.is_subordinate_json(list(p), dominant, path, tolerance, samples, **params))


def verify(case_id, trials=100, seed=0):
    return json.loads(_core.verify_json(case_id, trials, seed))


def falsify(case_id, budget=1000, seed=0):
    return json.loads(_core.falsify_json(case_id, budget, seed))
