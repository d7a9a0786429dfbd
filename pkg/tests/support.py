"""Shared helpers: golden fixture access and the acceptance parameter grids."""

import inspect
import json
from pathlib import Path

import numpy as np

from pqspecial import extended
from pqspecial.extended import ExtensionParams
from pqspecial.inequalities import CHECKERS

GOLDEN_PATH = Path(__file__).parent / "fixtures" / "golden.json"

# filled by the acceptance tests, printed at the end of the session
ACCEPTANCE_LINES = []


def report(criterion, ok, detail):
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok

VALUE_FUNCTIONS = {
    "extended_beta": extended.extended_beta,
    "gamma_p": extended.gamma_p,
    "phi": extended.phi_integral,
    "phi_integral": extended.phi_integral,
    "phi_series": extended.phi_series,
    "phi_derivative": extended.phi_derivative,
}

# criteria 2 and 4
PHI_GRID = [
    (b, b + gap, z, p, q)
    for b in (0.5, 1.0, 2.0)
    for gap in (0.5, 1.0, 2.0)
    for z in (-5.0, -1.0, 0.0, 1.0, 5.0)
    for p in (0.0, 0.5, 1.0)
    for q in (0.0, 0.5, 1.0)
]


def load_golden():
    with open(GOLDEN_PATH, encoding="utf-8") as fh:
        return json.load(fh)


def golden_value(entry):
    fn = VALUE_FUNCTIONS[entry["function"]]
    return fn(**entry["args"]).value


def checker_kwargs(name, flat):
    """Golden/flat kwargs -> checker kwargs (``p``, ``q`` folded into ``ext`` where the checker takes one)."""
    kw = dict(flat)
    if "ext" in inspect.signature(CHECKERS[name]).parameters and ("p" in kw or "q" in kw):
        kw["ext"] = ExtensionParams(kw.pop("p", 0.0), kw.pop("q", 0.0))
    return kw


def run_checker(name, flat, **options):
    return CHECKERS[name](**checker_kwargs(name, flat), **options)


def log_grid(lo, hi, n):
    return [float(v) for v in np.geomspace(lo, hi, n)]


# one instance per checker where the two sides must coincide
EQUALITY_EDGES = {
    "chebyshev_product": [dict(x=2.0, y=3.0, x1=2.0, y1=1.5, p=0.5, q=1.0)],
    "logconvex_pq": [dict(x=1.5, y=2.5, p1=0.3, q1=1.2, p2=2.0, q2=0.1, alpha=a) for a in (0.0, 1.0)],
    "turan_pq": [dict(x=1.5, y=2.5, p=1.0, q=0.5, a=0.0)],
    "logconvex_args": [dict(x1=1.0, y1=2.0, x2=3.0, y2=0.7, c=c, p=0.2, q=0.4) for c in (0.0, 1.0)],
    "shifted_square": [dict(x=1.5, y=2.5, a=0.0, b=0.0, p=0.3, q=0.9)],
    "ratio_monotone": [dict(beta=0.7, gamma=2.0, delta=2.0, p=0.5, q=0.5, z_grid=[0.5, 1.0, 2.0, 4.0])],
    "contiguous_product": [dict(beta=0.7, gamma=2.0, delta=2.0, z=1.5, p=0.5, q=1.0)],
    "logconvex_z": [dict(beta=0.7, gamma=2.0, z1=-1.0, z2=3.0, alpha=a, p=0.5, q=0.5) for a in (0.0, 1.0)]
    + [dict(beta=0.7, gamma=2.0, z1=2.0, z2=2.0, alpha=0.3, p=0.5, q=0.5)],
    "phi_logconvex_pq": [dict(beta=0.7, gamma=2.0, z=1.0, p1=0.3, q1=0.8, p2=1.5, q2=0.2, alpha=a)
                         for a in (0.0, 1.0)],
    "beta_ratio_decreasing": [dict(beta_grid=[0.5, 1.0, 1.5], gamma=3.0, sigma=0.0, z=1.0, p=0.5, q=0.5)],
    "remark_turan": [dict(beta=0.5, gamma=3.0, sigma=0.0, z=1.0, p=0.5, q=0.5)],
}
