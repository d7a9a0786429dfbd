"""Seeded random sweeps over every checker, and their CSV serialisation.

Each checker gets its own generator, seeded from ``(seed, checker index)``,
so a report depends only on the grid and never on which other checkers ran.
Parameters are drawn by rejection sampling against the checker's hypotheses;
a case that finds no feasible draw within ``max_attempts`` is recorded as
``skipped``, as is a case whose evaluation raised.
"""

from __future__ import annotations

import csv
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .errors import PQSpecialError
from .extended import ExtensionParams
from .inequalities import CHECKERS, HOLDS, INCONCLUSIVE, VIOLATED, InequalityVerdict
from .quadrature import QuadratureConfig

logger = logging.getLogger(__name__)

SKIPPED = "skipped"
STATUSES = (HOLDS, INCONCLUSIVE, VIOLATED, SKIPPED)
CSV_FIELDS = ("case_id", "checker", "params_json", "lhs", "rhs", "margin", "error_budget", "status")


@dataclass(frozen=True)
class GridSpec:
    """Sampling ranges (inclusive ``(lo, hi)`` pairs), case count per checker and seed.

    ``pq_zero_fraction`` is the probability that a drawn ``p`` or ``q`` is
    exactly 0, so the classical and one-sided cases are exercised too.
    """

    n: int = 10
    seed: int = 0
    xy: tuple = (0.5, 5.0)
    pq: tuple = (0.0, 3.0)
    pq_zero_fraction: float = 0.2
    shift: tuple = (-2.0, 2.0)
    beta: tuple = (0.2, 3.0)
    gap: tuple = (0.2, 3.0)
    sigma: tuple = (0.05, 1.5)
    z: tuple = (-5.0, 5.0)
    weight: tuple = (0.0, 1.0)
    grid_points: int = 8
    max_attempts: int = 1000

    def __post_init__(self):
        for name in ("xy", "pq", "shift", "beta", "gap", "sigma", "z", "weight"):
            lo, hi = getattr(self, name)
            if not lo <= hi:
                raise ValueError(f"{name} range is empty: {lo!r} > {hi!r}")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.xy[0] <= 0 or self.beta[0] <= 0 or self.gap[0] <= 0:
            raise ValueError("xy, beta and gap ranges must be positive")
        if self.pq[0] < 0 or self.sigma[0] < 0:
            raise ValueError("pq and sigma ranges must be non-negative")
        if not (0 <= self.weight[0] and self.weight[1] <= 1):
            raise ValueError("weight range must lie in [0, 1]")
        if not 0 <= self.pq_zero_fraction <= 1:
            raise ValueError("pq_zero_fraction must lie in [0, 1]")
        if self.grid_points < 2 or self.max_attempts < 1:
            raise ValueError("grid_points must be >= 2 and max_attempts >= 1")


@dataclass(frozen=True)
class CaseResult:
    case_id: int
    checker: str
    status: str
    params: dict = field(default_factory=dict)
    verdict: InequalityVerdict | None = None
    note: str = ""


@dataclass(frozen=True)
class SuiteReport:
    cases: tuple

    def counts(self, checker: str | None = None) -> dict:
        c = Counter(r.status for r in self.cases if checker is None or r.checker == checker)
        return {s: c.get(s, 0) for s in STATUSES}

    def checkers(self) -> list:
        return list(dict.fromkeys(r.checker for r in self.cases))

    @property
    def verdicts(self) -> list:
        return [r.verdict for r in self.cases if r.verdict is not None]


class _Draw:
    def __init__(self, rng: np.random.Generator, grid: GridSpec):
        self.rng = rng
        self.grid = grid

    def u(self, rng_range):
        lo, hi = rng_range
        return float(self.rng.uniform(lo, hi))

    def pq(self):
        if self.rng.random() < self.grid.pq_zero_fraction:
            return 0.0
        return self.u(self.grid.pq)

    def ext(self):
        return ExtensionParams(self.pq(), self.pq())

    def zpos(self):
        lo, hi = self.grid.z
        return self.u((max(lo, 0.01), max(hi, 0.01)))


def _s_chebyshev(d: _Draw):
    x, y, x1, y1 = (d.u(d.grid.xy) for _ in range(4))
    if (x - x1) * (y - y1) < 0:
        return None
    return dict(x=x, y=y, x1=x1, y1=y1, ext=d.ext())


def _s_logconvex_pq(d: _Draw):
    return dict(x=d.u(d.grid.xy), y=d.u(d.grid.xy), p1=d.pq(), q1=d.pq(), p2=d.pq(), q2=d.pq(),
                alpha=d.u(d.grid.weight))


def _s_turan(d: _Draw):
    x, y, ext, a = d.u(d.grid.xy), d.u(d.grid.xy), d.ext(), d.u(d.grid.shift)
    if min(ext.p, ext.q) < abs(a):
        return None
    return dict(x=x, y=y, ext=ext, a=a)


def _s_logconvex_args(d: _Draw):
    return dict(x1=d.u(d.grid.xy), y1=d.u(d.grid.xy), x2=d.u(d.grid.xy), y2=d.u(d.grid.xy),
                c=d.u(d.grid.weight), ext=d.ext())


def _s_shifted_square(d: _Draw):
    x, y, a, b, ext = d.u(d.grid.xy), d.u(d.grid.xy), d.u(d.grid.shift), d.u(d.grid.shift), d.ext()
    if (ext.p == 0 and x - abs(a) <= 0) or (ext.q == 0 and y - abs(b) <= 0):
        return None
    return dict(x=x, y=y, ext=ext, a=a, b=b)


def _s_ratio_monotone(d: _Draw):
    beta = d.u(d.grid.beta)
    delta = beta + d.u(d.grid.gap)
    gamma = delta + d.u((0.0, d.grid.gap[1]))
    top = d.zpos()
    z_grid = [float(v) for v in np.geomspace(top / 50, top, d.grid.grid_points)]
    return dict(beta=beta, gamma=gamma, delta=delta, ext=d.ext(), z_grid=z_grid)


def _s_contiguous(d: _Draw):
    beta = d.u(d.grid.beta)
    delta = beta + d.u(d.grid.gap)
    gamma = delta + d.u((0.0, d.grid.gap[1]))
    return dict(beta=beta, gamma=gamma, delta=delta, ext=d.ext(), z=d.zpos())


def _s_logconvex_z(d: _Draw):
    beta = d.u(d.grid.beta)
    return dict(beta=beta, gamma=beta + d.u(d.grid.gap), z1=d.u(d.grid.z), z2=d.u(d.grid.z),
                alpha=d.u(d.grid.weight), ext=d.ext())


def _s_phi_logconvex_pq(d: _Draw):
    pqs = [d.pq() for _ in range(4)]
    if min(pqs) <= 0:
        return None
    beta = d.u(d.grid.beta)
    return dict(beta=beta, gamma=beta + d.u(d.grid.gap), z=d.zpos(), p1=pqs[0], q1=pqs[1], p2=pqs[2],
                q2=pqs[3], alpha=d.u(d.grid.weight))


def _s_beta_ratio(d: _Draw):
    lo = d.u(d.grid.beta)
    hi = lo + d.u((0.1, 2.0))
    sigma = d.u(d.grid.sigma)
    if sigma == 0:
        return None
    gamma = hi + sigma + d.u(d.grid.gap)
    beta_grid = [float(v) for v in np.geomspace(lo, hi, d.grid.grid_points)]
    return dict(beta_grid=beta_grid, gamma=gamma, sigma=sigma, ext=d.ext(), z=d.zpos())


def _s_remark(d: _Draw):
    beta, sigma = d.u(d.grid.beta), d.u(d.grid.sigma)
    return dict(beta=beta, gamma=beta + 2 * sigma + d.u(d.grid.gap), sigma=sigma, ext=d.ext(), z=d.zpos())


SAMPLERS: dict[str, Callable[[_Draw], dict | None]] = {
    "chebyshev_product": _s_chebyshev,
    "logconvex_pq": _s_logconvex_pq,
    "turan_pq": _s_turan,
    "logconvex_args": _s_logconvex_args,
    "shifted_square": _s_shifted_square,
    "ratio_monotone": _s_ratio_monotone,
    "contiguous_product": _s_contiguous,
    "logconvex_z": _s_logconvex_z,
    "phi_logconvex_pq": _s_phi_logconvex_pq,
    "beta_ratio_decreasing": _s_beta_ratio,
    "remark_turan": _s_remark,
}


def _flat(kwargs):
    out = {}
    for k, v in kwargs.items():
        if isinstance(v, ExtensionParams):
            out.update(p=v.p, q=v.q)
        else:
            out[k] = v
    return out


def run_suite(grid: GridSpec, checkers: Iterable[str] | None = None, *, flip: bool = False,
              config: QuadratureConfig | None = None) -> SuiteReport:
    """Sample ``grid.n`` cases per checker and evaluate them in order."""
    names = list(CHECKERS) if checkers is None else list(checkers)
    unknown = [n for n in names if n not in CHECKERS]
    if unknown:
        raise KeyError(f"unknown checker(s): {', '.join(unknown)}")
    cases = []
    case_id = 0
    for name in names:
        index = list(CHECKERS).index(name)
        draw = _Draw(np.random.default_rng([grid.seed, index]), grid)
        sampler, checker = SAMPLERS[name], CHECKERS[name]
        for _ in range(grid.n):
            kwargs = None
            for _ in range(grid.max_attempts):
                kwargs = sampler(draw)
                if kwargs is not None:
                    break
            if kwargs is None:
                cases.append(CaseResult(case_id, name, SKIPPED, note="no feasible parameters found"))
            else:
                try:
                    v = checker(**kwargs, config=config, flip=flip)
                except PQSpecialError as exc:
                    logger.warning("%s case %d skipped: %s", name, case_id, exc)
                    cases.append(CaseResult(case_id, name, SKIPPED, _flat(kwargs), note=str(exc)))
                else:
                    cases.append(CaseResult(case_id, name, v.status, v.params, v))
            case_id += 1
    return SuiteReport(tuple(cases))


def _num(v):
    return format(v, ".17g")


def write_cases_csv(report: SuiteReport, fh) -> None:
    """One row per case, columns ``CSV_FIELDS``; LF line endings."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in report.cases:
        v = r.verdict
        nums = ["", "", "", ""] if v is None else [_num(v.lhs), _num(v.rhs), _num(v.margin), _num(v.error_budget)]
        w.writerow([r.case_id, r.checker, json.dumps(r.params, sort_keys=True), *nums, r.status])
