"""Equivariant motivic cohomology of a field: weight 0 complexes, formal tables and checks."""

import json
import os
from pathlib import Path

_packaged = Path(__file__).resolve().parent / "fixtures"
if "EQMOT_FIXTURES" not in os.environ and _packaged.is_dir():
    os.environ["EQMOT_FIXTURES"] = str(_packaged)

from ._eqmot import (  # noqa: E402
    FixtureError,
    FormalError,
    TableRangeError,
    bredon_point,
    derive,
    fixture_dir,
    normalize,
    reduce_bidegree,
    suite_ids,
    weight0,
    weight0_closed_form,
    weight1_closed_form,
    weight_sigma_closed_form,
)
from . import _eqmot  # noqa: E402


def grid(weight="0", p_range=8, a_range=-1, coeff="Z", profile="qclosed", source="computed"):
    """Cells in the export schema: a, p, weight, coeff, group, source, citation."""
    return json.loads(_eqmot.grid_json(weight, p_range, a_range, coeff, profile, source))


def check(suite="all", p_range=8, a_range=12, n_max=16, verbose=False):
    """One report per suite: suite, passed, checked, failures (and cells when verbose)."""
    return json.loads(_eqmot.check_json(suite, p_range, a_range, n_max, verbose))


__all__ = [
    "FixtureError",
    "FormalError",
    "TableRangeError",
    "bredon_point",
    "check",
    "derive",
    "fixture_dir",
    "grid",
    "normalize",
    "reduce_bidegree",
    "suite_ids",
    "weight0",
    "weight0_closed_form",
    "weight1_closed_form",
    "weight_sigma_closed_form",
]
