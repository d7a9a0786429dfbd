"""Extended gamma, (p,q)-beta and (p,q)-confluent hypergeometric functions.

Definitions (real arguments throughout)::

    Gamma_p(z)     = int_0^inf t^(z-1) exp(-t - p/t) dt
    B_{p,q}(x, y)  = int_0^1 t^(x-1) (1-t)^(y-1) exp(-p/t - q/(1-t)) dt
    Phi_{p,q}(b; g; z)
                   = sum_n B_{p,q}(b+n, g-b) / B(b, g-b) * z^n / n!
                   = 1/B(b, g-b) int_0^1 t^(b-1) (1-t)^(g-b-1) exp(z t - p/t - q/(1-t)) dt

``B_{p,p}`` is the one-parameter extended beta ``B(x, y; p)`` and
``B_{0,0}`` the classical beta.  Note that the series is normalised by the
*classical* beta, so ``Phi_{p,q}(b; g; 0) = B_{p,q}(b, g-b) / B(b, g-b)``,
which is below 1 once ``p`` or ``q`` is positive.

When ``p > 0`` the factor ``exp(-p/t)`` makes the integral converge for any
real ``x``; only ``p == 0`` forces ``x > 0`` (likewise ``q`` and ``y``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import special
from .errors import DomainError
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureResult,
    integrate_halfline_log,
    integrate_unit_log,
    integrate_unit_log_batch,
)

__all__ = [
    "ExtensionParams",
    "SeriesConfig",
    "SeriesResult",
    "gamma_p",
    "extended_beta",
    "extended_beta_single",
    "phi_series",
    "phi_integral",
    "phi",
    "phi_derivative",
    "phi_reflect",
]

# relative accuracy credited to the classical gamma/beta normalisers
CLASSICAL_REL_ERROR = 1e-13


@dataclass(frozen=True)
class ExtensionParams:
    """The pair ``(p, q)`` in the factor ``exp(-p/t - q/(1-t))``."""

    p: float = 0.0
    q: float = 0.0

    def __post_init__(self):
        _check_pq(self.p, self.q)

    def swapped(self) -> "ExtensionParams":
        return ExtensionParams(self.q, self.p)


@dataclass(frozen=True)
class SeriesConfig:
    rel_tol: float = 1e-13
    max_terms: int = 500
    tail_run: int = 3

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if self.max_terms < 10:
            raise DomainError(f"max_terms must be >= 10, got {self.max_terms!r}")
        if self.tail_run < 1:
            raise DomainError(f"tail_run must be >= 1, got {self.tail_run!r}")


@dataclass(frozen=True)
class SeriesResult:
    value: float
    error_estimate: float
    terms: int
    evaluations: int
    converged: bool

    @property
    def rel_error(self) -> float:
        return self.error_estimate / abs(self.value) if self.value else math.inf


def _real(v, name):
    try:
        v = float(v)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {v!r}") from None
    if not math.isfinite(v):
        raise DomainError(f"{name} must be finite, got {v!r}")
    return v


def _check_pq(p, q):
    p, q = _real(p, "p"), _real(q, "q")
    if p < 0 or q < 0:
        raise DomainError(f"p and q must be >= 0, got p={p!r}, q={q!r}")
    return p, q


def _check_beta_args(x, y, p, q):
    x, y = _real(x, "x"), _real(y, "y")
    p, q = _check_pq(p, q)
    if p == 0 and x <= 0:
        raise DomainError(f"x must be > 0 when p == 0, got x={x!r}")
    if q == 0 and y <= 0:
        raise DomainError(f"y must be > 0 when q == 0, got y={y!r}")
    return x, y, p, q


def _check_confluent(beta, gamma, z):
    beta, gamma, z = _real(beta, "beta"), _real(gamma, "gamma"), _real(z, "z")
    if not gamma > beta > 0:
        raise DomainError(f"need gamma > beta > 0, got beta={beta!r}, gamma={gamma!r}")
    return beta, gamma, z


def _damping(nodes, p, q):
    # -p/t - q/(1-t), with the p == 0 / q == 0 terms dropped so 0 * inf never occurs
    out = np.zeros_like(nodes.log_t)
    with np.errstate(over="ignore"):
        if p:
            out = out - p * np.exp(-nodes.log_t)
        if q:
            out = out - q * np.exp(-nodes.log_c)
    return out


def _power(a, log_u):
    # a * log(u), exactly 0 when a == 0 (log_u is finite, but keep it explicit)
    return a * log_u if a else 0.0


def gamma_p(z, p=0.0, config: QuadratureConfig | None = None) -> QuadratureResult:
    """Extended gamma ``int_0^inf t^(z-1) exp(-t - p/t) dt``.

    ``p == 0`` is answered by :func:`pqspecial.special.gamma` directly.
    """
    z = _real(z, "z")
    p = _real(p, "p")
    if z <= 0:
        raise DomainError(f"z must be > 0, got {z!r}")
    if p < 0:
        raise DomainError(f"p must be >= 0, got {p!r}")
    if p == 0:
        g = special.gamma(z)
        return QuadratureResult(g, g * CLASSICAL_REL_ERROR, 1, True)

    def log_f(nodes):
        with np.errstate(over="ignore"):
            return _power(z - 1.0, nodes.log_t) - nodes.t - p * np.exp(-nodes.log_t)

    return integrate_halfline_log(log_f, config)


def extended_beta(x, y, p=0.0, q=0.0, config: QuadratureConfig | None = None) -> QuadratureResult:
    """Extended beta ``B_{p,q}(x, y)`` by double-exponential quadrature.

    >>> r = extended_beta(2, 3)
    >>> round(r.value * 12, 12)
    1.0
    """
    x, y, p, q = _check_beta_args(x, y, p, q)

    def log_f(nodes):
        return _power(x - 1.0, nodes.log_t) + _power(y - 1.0, nodes.log_c) + _damping(nodes, p, q)

    return integrate_unit_log(log_f, config)


def extended_beta_single(x, y, p=0.0, config: QuadratureConfig | None = None) -> QuadratureResult:
    """One-parameter extended beta ``B(x, y; p) = B_{p,p}(x, y)``."""
    return extended_beta(x, y, p, p, config)


def phi_integral(beta, gamma, z, p=0.0, q=0.0, config: QuadratureConfig | None = None) -> QuadratureResult:
    """``Phi_{p,q}(beta; gamma; z)`` from its integral representation.

    Negative ``z`` is integrated directly; the integrand stays bounded.
    """
    beta, gamma, z = _check_confluent(beta, gamma, z)
    p, q = _check_pq(p, q)
    a, b = beta - 1.0, gamma - beta - 1.0

    def log_f(nodes):
        return _power(a, nodes.log_t) + _power(b, nodes.log_c) + z * nodes.t + _damping(nodes, p, q)

    raw = integrate_unit_log(log_f, config)
    return raw.scaled(1.0 / special.beta(beta, gamma - beta), CLASSICAL_REL_ERROR)


phi = phi_integral


def phi_series(
    beta,
    gamma,
    z,
    p=0.0,
    q=0.0,
    sconf: SeriesConfig | None = None,
    qconf: QuadratureConfig | None = None,
    chunk: int = 16,
) -> SeriesResult:
    """``Phi_{p,q}(beta; gamma; z)`` by summing its defining series.

    Coefficients ``B_{p,q}(beta+n, gamma-beta)`` come from quadrature, ``chunk``
    of them at a time on one shared grid (only the power ``t^n`` differs).
    Summation stops once ``tail_run`` consecutive terms are each below
    ``rel_tol`` times the partial sum.  The error estimate adds the
    propagated quadrature errors and a geometric bound on the omitted tail,
    valid because ``B_{p,q}(beta+n, .)`` decreases in ``n``.
    """
    beta, gamma, z = _check_confluent(beta, gamma, z)
    p, q = _check_pq(p, q)
    sconf = sconf or SeriesConfig()
    qconf = qconf or DEFAULT_CONFIG
    norm = special.beta(beta, gamma - beta)
    a, b = beta - 1.0, gamma - beta - 1.0

    total = 0.0
    abs_err = 0.0
    magnitude = 0.0  # sum of |terms|, scales the normaliser's rounding
    coef = 1.0  # z^n / n!
    small_run = 0
    evaluations = 0
    n = 0
    last = 0.0
    while n < sconf.max_terms:
        ns = np.arange(n, min(n + chunk, sconf.max_terms), dtype=float)

        def log_f(nodes, ns=ns):
            base = _power(a, nodes.log_t) + _power(b, nodes.log_c) + _damping(nodes, p, q)
            return base + ns[:, None] * nodes.log_t

        results = integrate_unit_log_batch(log_f, qconf)
        evaluations += results[0].evaluations * len(results)
        for r in results:
            term = r.value / norm * coef
            total += term
            magnitude += abs(term)
            abs_err += r.error_estimate / norm * abs(coef)
            last = term
            n += 1
            coef *= z / n
            if abs(term) <= sconf.rel_tol * abs(total):
                small_run += 1
                if small_run >= sconf.tail_run:
                    ratio = abs(z) / n
                    tail = abs(last) * ratio / (1.0 - ratio) if ratio < 1 else abs(last)
                    err = abs_err + tail + magnitude * CLASSICAL_REL_ERROR
                    return SeriesResult(total, err, n, evaluations, ratio < 1)
            else:
                small_run = 0
    return SeriesResult(total, abs_err + abs(last) + magnitude * CLASSICAL_REL_ERROR, n, evaluations, False)


def phi_derivative(beta, gamma, z, p=0.0, q=0.0, n=1, config: QuadratureConfig | None = None) -> QuadratureResult:
    """``n``-th derivative in ``z``: ``(beta)_n / (gamma)_n * Phi_{p,q}(beta+n; gamma+n; z)``."""
    beta, gamma, z = _check_confluent(beta, gamma, z)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    factor = special.pochhammer(beta, n) / special.pochhammer(gamma, n)
    # each Pochhammer product carries about n roundings
    return phi_integral(beta + n, gamma + n, z, p, q, config).scaled(factor, 4 * n * 2.3e-16)


def phi_reflect(beta, gamma, z, p=0.0, q=0.0, config: QuadratureConfig | None = None) -> QuadratureResult:
    """Right-hand side of ``Phi_{p,q}(b; g; z) = e^z Phi_{q,p}(g-b; g; -z)``."""
    beta, gamma, z = _check_confluent(beta, gamma, z)
    return phi_integral(gamma - beta, gamma, -z, q, p, config).scaled(math.exp(z), 2.3e-16)
