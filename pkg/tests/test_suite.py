import csv
import io
import json

import pytest

from pqspecial.inequalities import CHECKERS
from pqspecial.suite import CSV_FIELDS, SKIPPED, GridSpec, run_suite, write_cases_csv


def test_counts_cover_all_cases():
    rep = run_suite(GridSpec(n=3, seed=5))
    assert len(rep.cases) == 3 * len(CHECKERS)
    assert sum(rep.counts().values()) == len(rep.cases)
    assert rep.checkers() == list(CHECKERS)


def test_deterministic_and_independent_of_selection():
    full = run_suite(GridSpec(n=4, seed=9))
    one = run_suite(GridSpec(n=4, seed=9), ["turan_pq"])
    again = run_suite(GridSpec(n=4, seed=9), ["turan_pq"])
    picked = [c.params for c in full.cases if c.checker == "turan_pq"]
    assert [c.params for c in one.cases] == picked
    assert one == again


def test_seed_changes_cases():
    a = run_suite(GridSpec(n=2, seed=1), ["logconvex_z"])
    b = run_suite(GridSpec(n=2, seed=2), ["logconvex_z"])
    assert a.cases[0].params != b.cases[0].params


def test_unknown_checker():
    with pytest.raises(KeyError):
        run_suite(GridSpec(n=1), ["nosuch"])


def test_infeasible_grid_is_skipped():
    # p = q = 0 always and |a| >= 0.5, so no Turan shift is feasible
    grid = GridSpec(n=2, pq_zero_fraction=1.0, shift=(0.5, 1.0), max_attempts=5)
    rep = run_suite(grid, ["turan_pq"])
    assert rep.counts("turan_pq")[SKIPPED] == 2


@pytest.mark.parametrize("kw", [dict(xy=(3, 1)), dict(n=-1), dict(xy=(0, 1)), dict(pq=(-1, 1)),
                                dict(weight=(0, 2)), dict(grid_points=1)])
def test_grid_validation(kw):
    with pytest.raises(ValueError):
        GridSpec(**kw)


def test_csv_round_trip():
    rep = run_suite(GridSpec(n=2, seed=3))
    buf = io.StringIO()
    write_cases_csv(rep, buf)
    text = buf.getvalue()
    assert "\r" not in text
    rows = list(csv.DictReader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_FIELDS
    assert len(rows) == len(rep.cases)
    for row, case in zip(rows, rep.cases):
        assert json.loads(row["params_json"]) == case.params
        assert float(row["margin"]) == case.verdict.margin
        assert row["status"] == case.status


def test_empty_report():
    rep = run_suite(GridSpec(n=0))
    assert rep.cases == ()
    assert sum(rep.counts().values()) == 0
