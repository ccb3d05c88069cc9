"""Python bindings for the clawlab C++ core."""

import json

from ._core import (
    BudgetExceeded,
    Graph,
    InvalidArgument,
    catalog,
    catalog_names,
    check_ids,
    chromatic_number,
    clique_number,
    complement,
    independence_number,
    is_circular_interval,
    is_claw_free,
    is_f_choosable,
    is_linear_interval,
    is_quasi_line,
    is_thickened_c5,
    join,
    line_graph,
)
from ._core import run_check as _run_check


def run_check(check_id, max_b=0, workers=1):
    """Run one registered check and return its report as a dict."""
    return json.loads(_run_check(check_id, max_b, workers))
