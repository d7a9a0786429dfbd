"""Double-exponential (tanh-sinh) quadrature on (0, 1) and (0, inf).

The unit interval is reached through

    t = (1 + tanh(pi/2 sinh s)) / 2,      dt/ds = pi cosh(s) t (1 - t),

and the trapezoidal rule in ``s`` is refined by halving the step: level ``k``
uses step ``2**-k`` and adds only the odd multiples, so every level reuses all
earlier evaluations.  ``t`` and ``1 - t`` are both computed without
cancellation, which keeps singular or exponentially damped behaviour at
either endpoint resolvable.

Two integrand conventions are supported:

* plain: ``f(t)`` receives a float array of abscissae and returns values;
* log: ``log_f(nodes)`` receives a :class:`UnitNodes` (or
  :class:`HalfLineNodes`) bundle and returns the *logarithm* of the integrand,
  ``-inf`` allowed.  Working in logs lets the abscissae reach ``t ~ exp(-1700)``
  without underflow, and the result is ``sum(exp(log_f + log_weight))``.

A log integrand may return a 2-d array ``(rows, points)``; each row is
integrated separately on a shared grid (see :func:`integrate_unit_log_batch`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

from .errors import DomainError, IntegrandError

__all__ = [
    "QuadratureConfig",
    "QuadratureResult",
    "UnitNodes",
    "HalfLineNodes",
    "integrate_unit",
    "integrate_unit_log",
    "integrate_unit_log_batch",
    "integrate_halfline",
    "integrate_halfline_log",
]

EPS = np.finfo(float).eps

# |s| cut-offs.  With S_MAX_LOG the smallest abscissa is t ~ exp(-pi sinh 7) ~ exp(-1722),
# so t**x loses nothing measurable for x >= 0.02.  Plain integrands see t as a float and
# would underflow there; S_MAX_PLAIN keeps t >= 5e-62.
S_MAX_LOG = 7.0
S_MAX_PLAIN = 4.5
MAX_LEVEL_CAP = 15


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    max_level: int = 12
    min_level: int = 3

    def __post_init__(self):
        if not (self.rel_tol > 0 and math.isfinite(self.rel_tol)):
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if not self.abs_tol >= 0:
            raise DomainError(f"abs_tol must be non-negative, got {self.abs_tol!r}")
        if not 1 <= self.min_level <= self.max_level <= MAX_LEVEL_CAP:
            raise DomainError(
                f"need 1 <= min_level <= max_level <= {MAX_LEVEL_CAP}, "
                f"got min_level={self.min_level}, max_level={self.max_level}"
            )

    def with_overrides(self, **kw) -> "QuadratureConfig":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class QuadratureResult:
    """An integral value together with its error estimate.

    ``converged`` is False when ``max_level`` was reached before the
    tolerance; the value is still the best available estimate.
    """

    value: float
    error_estimate: float
    evaluations: int
    converged: bool

    @property
    def rel_error(self) -> float:
        if self.value == 0.0:
            return 0.0 if self.error_estimate == 0.0 else math.inf
        return self.error_estimate / abs(self.value)

    def scaled(self, factor: float, rel_error: float = 0.0) -> "QuadratureResult":
        """Multiply by ``factor`` whose own relative error is ``rel_error``."""
        value = self.value * factor
        return QuadratureResult(
            value=value,
            error_estimate=self.error_estimate * abs(factor) + abs(value) * rel_error,
            evaluations=self.evaluations,
            converged=self.converged,
        )


class UnitNodes(NamedTuple):
    """Abscissae on (0, 1): ``t``, its accurate complement ``c = 1 - t`` and their logs."""

    log_t: np.ndarray
    log_c: np.ndarray
    t: np.ndarray
    c: np.ndarray


class HalfLineNodes(NamedTuple):
    """Abscissae on (0, inf) as ``log_t`` and ``t`` (``t`` may overflow to inf)."""

    log_t: np.ndarray
    t: np.ndarray


class _Level(NamedTuple):
    nodes: UnitNodes
    log_weight: np.ndarray  # log(dt/ds), step size excluded


def _readonly(a):
    a.setflags(write=False)
    return a


@lru_cache(maxsize=None)
def _level(level: int, s_max: float) -> _Level:
    # new abscissae of this level: all integers at level 0, odd multiples of 2**-level after
    h = 2.0 ** -level
    if level == 0:
        k = np.arange(-math.floor(s_max), math.floor(s_max) + 1, dtype=float)
    else:
        m = math.floor(s_max / h)
        k = np.arange(-m, m + 1, dtype=float)
        k = k[k.astype(np.int64) % 2 != 0]
    s = k * h
    u = 0.5 * math.pi * np.sinh(s)
    e = np.exp(-2.0 * np.abs(u))  # in (0, 1]
    l1e = np.log1p(e)
    pos = u >= 0
    t = np.where(pos, 1.0 / (1.0 + e), e / (1.0 + e))
    c = np.where(pos, e / (1.0 + e), 1.0 / (1.0 + e))
    log_t = np.where(pos, -l1e, 2.0 * u - l1e)
    log_c = np.where(pos, -2.0 * u - l1e, -l1e)
    log_weight = math.log(math.pi) + np.log(np.cosh(s)) + log_t + log_c
    nodes = UnitNodes(*(_readonly(a) for a in (log_t, log_c, t, c)))
    return _Level(nodes, _readonly(log_weight))


def _first_nan(terms, level):
    idx = np.argwhere(np.isnan(terms))[0]
    return float(level.nodes.t[idx[-1]])


def _refine(level_terms: Callable[[_Level], np.ndarray], s_max: float, config: QuadratureConfig):
    """Run the level loop.  ``level_terms`` maps a level to weighted terms ``(rows, points)``."""
    raw = None
    prev = None
    evaluations = 0
    for level in range(config.max_level + 1):
        lev = _level(level, s_max)
        terms = level_terms(lev)
        if np.isnan(terms).any():
            raise IntegrandError("integrand evaluated to NaN", _first_nan(terms, lev))
        evaluations += terms.shape[-1]
        part = terms.sum(axis=-1)
        raw = part if raw is None else raw + part
        current = raw * 2.0 ** -level
        if prev is None:
            err = np.abs(current)
        else:
            with np.errstate(invalid="ignore"):
                err = np.abs(current - prev)
        err = np.maximum(err, 10.0 * EPS * np.abs(current))
        err = np.where(np.isfinite(err), err, np.inf)
        ok = err <= np.maximum(config.rel_tol * np.abs(current), config.abs_tol)
        if level >= config.min_level and ok.all():
            return current, err, evaluations, np.ones_like(ok)
        prev = current
    return current, err, evaluations, ok


def _results(values, errs, evaluations, ok):
    return [
        QuadratureResult(float(v), float(e), evaluations, bool(c))
        for v, e, c in zip(values, errs, ok)
    ]


def _unit_log_terms(log_f):
    def terms(lev):
        # exp(-log t) overflowing to inf is the normal way to reach log_f = -inf
        with np.errstate(over="ignore"):
            lf = np.asarray(log_f(lev.nodes), dtype=float)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            return np.atleast_2d(np.exp(lf + lev.log_weight))

    return terms


def integrate_unit_log_batch(log_f, config: QuadratureConfig | None = None) -> list[QuadratureResult]:
    """Integrate several integrands on one shared grid.

    ``log_f(nodes)`` returns an array of shape ``(rows, points)``.  Refinement
    stops when every row meets the tolerance.
    """
    config = config or DEFAULT_CONFIG
    return _results(*_refine(_unit_log_terms(log_f), S_MAX_LOG, config))


def integrate_unit_log(log_f, config: QuadratureConfig | None = None) -> QuadratureResult:
    """Integrate ``exp(log_f(nodes))`` over (0, 1)."""
    (result,) = integrate_unit_log_batch(log_f, config)
    return result


def integrate_unit(f, config: QuadratureConfig | None = None) -> QuadratureResult:
    """Integrate ``f`` over (0, 1).

    ``f`` is called with a numpy array of abscissae strictly inside (0, 1).
    Integrable singularities at 0 are fine.  Near 1 the abscissae are plain
    floats, so a singularity there is only resolved to about 1e-8; use
    :func:`integrate_unit_log`, which also sees ``1 - t``.  NaN raises
    :class:`~pqspecial.errors.IntegrandError`.

    >>> round(integrate_unit(lambda t: t ** -0.5).value, 12)
    2.0
    """
    config = config or DEFAULT_CONFIG

    def terms(lev):
        # abscissae within one ulp of 1 round to t == 1.0 and are skipped
        inside = lev.nodes.t < 1.0
        t = lev.nodes.t[inside]
        out = np.zeros((1, inside.size))
        with np.errstate(divide="ignore", over="ignore", under="ignore"):
            values = np.broadcast_to(np.asarray(f(t), dtype=float), t.shape)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            out[0, inside] = values * np.exp(lev.log_weight[inside])
        return out

    (result,) = _results(*_refine(terms, S_MAX_PLAIN, config))
    return result


def _halfline_nodes(nodes: UnitNodes) -> tuple[HalfLineNodes, np.ndarray]:
    # t = u / (1 - u), dt = du / (1 - u)**2
    log_t = nodes.log_t - nodes.log_c
    with np.errstate(over="ignore", divide="ignore"):
        t = nodes.t / nodes.c
    return HalfLineNodes(log_t, t), -2.0 * nodes.log_c


def integrate_halfline_log(log_f, config: QuadratureConfig | None = None) -> QuadratureResult:
    """Integrate ``exp(log_f(nodes))`` over (0, inf) with ``nodes`` a :class:`HalfLineNodes`."""

    def mapped(nodes):
        half, log_jac = _halfline_nodes(nodes)
        return np.asarray(log_f(half), dtype=float) + log_jac

    return integrate_unit_log(mapped, config)


def integrate_halfline(f, config: QuadratureConfig | None = None) -> QuadratureResult:
    """Integrate ``f`` over (0, inf) via ``t = u / (1 - u)``.

    ``f`` must decay exponentially; it is called with arrays of finite
    positive abscissae.
    """
    config = config or DEFAULT_CONFIG

    def terms(lev):
        half, log_jac = _halfline_nodes(lev.nodes)
        with np.errstate(divide="ignore", over="ignore", under="ignore"):
            values = np.broadcast_to(np.asarray(f(half.t), dtype=float), half.t.shape)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            return np.atleast_2d(values * np.exp(lev.log_weight + log_jac))

    (result,) = _results(*_refine(terms, S_MAX_PLAIN, config))
    return result
