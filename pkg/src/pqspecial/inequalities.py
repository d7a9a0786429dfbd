"""Margin-reporting checks for the log-convexity, Turan-type and monotonicity inequalities.

Each checker evaluates both sides of one inequality instance, the margin
(favourable side minus the other), and an error budget propagated from the
quadrature error estimates.  The verdict is three-valued:

* ``holds``        margin >= budget
* ``violated``     margin <= -budget
* ``inconclusive`` otherwise

Every claim is written as ``lhs <= rhs`` so ``margin = rhs - lhs``.  Passing
``flip=True`` checks the reversed inequality instead; it exists to show that the
harness does flag inequalities that are false.

Hypotheses (shift feasibility, ordering of parameters, grid shape) raise
:class:`~pqspecial.errors.PreconditionError`; they are never reported as
violations.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

from . import special
from .errors import PreconditionError
from .extended import CLASSICAL_REL_ERROR, ExtensionParams, extended_beta, phi_integral
from .quadrature import QuadratureConfig

logger = logging.getLogger(__name__)

HOLDS = "holds"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

# floor of every budget, relative to the larger side
BUDGET_FLOOR = 1e-14


@dataclass(frozen=True)
class InequalityVerdict:
    name: str
    params: dict
    lhs: float
    rhs: float
    margin: float
    error_budget: float
    status: str
    extras: dict = field(default_factory=dict)


def classify(margin: float, budget: float) -> str:
    if margin >= budget:
        return HOLDS
    if margin <= -budget:
        return VIOLATED
    return INCONCLUSIVE


def error_budget(lhs: float, rhs: float, rel_errors: Sequence[float]) -> float:
    """First-order budget for sides built from ``k = len(rel_errors)`` evaluated quantities.

    ``k * sum(rel_errors) * min(|lhs|, |rhs|)`` plus a floor of
    ``BUDGET_FLOOR * max(|lhs|, |rhs|)``.
    """
    k = len(rel_errors)
    small, big = sorted((abs(lhs), abs(rhs)))
    total = k * math.fsum(rel_errors) * small + BUDGET_FLOOR * big
    return total if math.isfinite(total) else math.inf


def _verdict(name, params, lhs, rhs, rel_errors, flip, extras=None):
    if flip:
        lhs, rhs = rhs, lhs
    margin = rhs - lhs
    budget = error_budget(lhs, rhs, rel_errors)
    return InequalityVerdict(name, params, lhs, rhs, margin, budget, classify(margin, budget), extras or {})


def _monotone_verdict(name, params, values, rel_errors, increasing, flip, extras=None):
    """Check a sequence for monotonicity pair by pair; report the worst pair.

    The worst pair is the one with the smallest margin/budget ratio, so the
    verdict is ``violated`` if any pair is, and ``holds`` only if all pairs do.
    """
    worst = None
    for k in range(len(values) - 1):
        lo, hi = (values[k], values[k + 1]) if increasing else (values[k + 1], values[k])
        rels = (rel_errors[k], rel_errors[k + 1])
        v = _verdict(name, params, lo, hi, [r for r in rels for _ in range(2)], flip)
        score = v.margin / v.error_budget if v.error_budget else math.copysign(math.inf, v.margin)
        if worst is None or score < worst[0]:
            worst = (score, k, v)
    _, k, v = worst
    return InequalityVerdict(v.name, v.params, v.lhs, v.rhs, v.margin, v.error_budget, v.status,
                             {"worst_pair": k, "values": list(values), **(extras or {})})


def _ext(ext):
    if ext is None:
        return ExtensionParams()
    if isinstance(ext, ExtensionParams):
        return ext
    return ExtensionParams(*ext)


def _admissible(x, y, p, q, what):
    if p < 0 or q < 0:
        raise PreconditionError(f"{what}: extension parameters must be >= 0, got p={p!r}, q={q!r}")
    if (p == 0 and x <= 0) or (q == 0 and y <= 0):
        raise PreconditionError(f"{what}: B_{{{p},{q}}}({x}, {y}) diverges")


def _weight(w, name="alpha"):
    if not 0.0 <= w <= 1.0:
        raise PreconditionError(f"{name} must lie in [0, 1], got {w!r}")
    return float(w)


def _increasing_grid(grid, name):
    grid = [float(v) for v in grid]
    if len(grid) < 2:
        raise PreconditionError(f"{name} needs at least two points")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise PreconditionError(f"{name} must be strictly increasing")
    return grid


def _confluent_order(beta, gamma, delta):
    if not (gamma >= delta > beta > 0):
        raise PreconditionError(f"need gamma >= delta > beta > 0, got {beta}, {gamma}, {delta}")


def check_chebyshev_product(x, y, x1, y1, ext=None, *, config: QuadratureConfig | None = None, flip=False):
    """``B(x, y1) B(x1, y) <= B(x1, y1) B(x, y)`` for ``(x - x1)(y - y1) >= 0``."""
    ext = _ext(ext)
    if (x - x1) * (y - y1) < 0:
        raise PreconditionError(f"hypothesis (x - x1)(y - y1) >= 0 fails: {(x - x1) * (y - y1)!r}")
    for a, b in ((x, y), (x1, y1), (x, y1), (x1, y)):
        _admissible(a, b, ext.p, ext.q, "chebyshev_product")

    def B(a, b):
        return extended_beta(a, b, ext.p, ext.q, config)

    b_xy1, b_x1y, b_x1y1, b_xy = B(x, y1), B(x1, y), B(x1, y1), B(x, y)
    params = dict(x=x, y=y, x1=x1, y1=y1, p=ext.p, q=ext.q)
    return _verdict("chebyshev_product", params, b_xy1.value * b_x1y.value, b_x1y1.value * b_xy.value,
                    [r.rel_error for r in (b_xy1, b_x1y, b_x1y1, b_xy)], flip)


def check_logconvex_pq(x, y, p1, q1, p2, q2, alpha, *, config: QuadratureConfig | None = None, flip=False):
    """``B_{mix}(x, y) <= B_{p1,q1}(x, y)^alpha B_{p2,q2}(x, y)^(1-alpha)``.

    ``mix = (alpha p1 + (1-alpha) p2, alpha q1 + (1-alpha) q2)``.
    """
    alpha = _weight(alpha)
    for p, q in ((p1, q1), (p2, q2)):
        _admissible(x, y, p, q, "logconvex_pq")
    pm = alpha * p1 + (1 - alpha) * p2
    qm = alpha * q1 + (1 - alpha) * q2
    mid = extended_beta(x, y, pm, qm, config)
    b1 = extended_beta(x, y, p1, q1, config)
    b2 = extended_beta(x, y, p2, q2, config)
    params = dict(x=x, y=y, p1=p1, q1=q1, p2=p2, q2=q2, alpha=alpha)
    return _verdict("logconvex_pq", params, mid.value, b1.value ** alpha * b2.value ** (1 - alpha),
                    [mid.rel_error, b1.rel_error, b2.rel_error], flip)


def check_turan_pq(x, y, ext=None, a=0.0, *, config: QuadratureConfig | None = None, flip=False):
    """``B_{p,q}(x, y)^2 <= B_{p+a,q+a}(x, y) B_{p-a,q-a}(x, y)``; needs ``p, q >= |a|``."""
    ext = _ext(ext)
    p, q = ext.p, ext.q
    if min(p - a, q - a, p + a, q + a) < 0:
        raise PreconditionError(f"shift a={a!r} leaves the domain p, q >= 0 (p={p!r}, q={q!r})")
    for pp, qq in ((p, q), (p + a, q + a), (p - a, q - a)):
        _admissible(x, y, pp, qq, "turan_pq")
    mid = extended_beta(x, y, p, q, config)
    up = extended_beta(x, y, p + a, q + a, config)
    down = extended_beta(x, y, p - a, q - a, config)
    params = dict(x=x, y=y, p=p, q=q, a=a)
    return _verdict("turan_pq", params, mid.value * mid.value, up.value * down.value,
                    [mid.rel_error, mid.rel_error, up.rel_error, down.rel_error], flip)


def check_logconvex_args(x1, y1, x2, y2, c, ext=None, *, config: QuadratureConfig | None = None, flip=False):
    """``B(c x1 + d x2, c y1 + d y2) <= B(x1, y1)^c B(x2, y2)^d`` with ``d = 1 - c``."""
    ext = _ext(ext)
    c = _weight(c, "c")
    d = 1.0 - c
    xm, ym = c * x1 + d * x2, c * y1 + d * y2
    for a, b in ((x1, y1), (x2, y2)):
        _admissible(a, b, ext.p, ext.q, "logconvex_args")
    mid = extended_beta(xm, ym, ext.p, ext.q, config)
    b1 = extended_beta(x1, y1, ext.p, ext.q, config)
    b2 = extended_beta(x2, y2, ext.p, ext.q, config)
    params = dict(x1=x1, y1=y1, x2=x2, y2=y2, c=c, p=ext.p, q=ext.q)
    return _verdict("logconvex_args", params, mid.value, b1.value ** c * b2.value ** d,
                    [mid.rel_error, b1.rel_error, b2.rel_error], flip)


def check_shifted_square(x, y, ext=None, a=0.0, b=0.0, *, config: QuadratureConfig | None = None, flip=False):
    """``B(x, y)^2 <= B(x + a, y + b) B(x - a, y - b)``."""
    ext = _ext(ext)
    for xx, yy in ((x, y), (x + a, y + b), (x - a, y - b)):
        _admissible(xx, yy, ext.p, ext.q, "shifted_square")
    mid = extended_beta(x, y, ext.p, ext.q, config)
    up = extended_beta(x + a, y + b, ext.p, ext.q, config)
    down = extended_beta(x - a, y - b, ext.p, ext.q, config)
    params = dict(x=x, y=y, a=a, b=b, p=ext.p, q=ext.q)
    return _verdict("shifted_square", params, mid.value * mid.value, up.value * down.value,
                    [mid.rel_error, mid.rel_error, up.rel_error, down.rel_error], flip)


def check_ratio_monotone(beta, gamma, delta, ext=None, z_grid=(), *, config: QuadratureConfig | None = None,
                         flip=False):
    """``z -> Phi(beta; gamma; z) / Phi(beta; delta; z)`` is nondecreasing over ``z_grid``."""
    ext = _ext(ext)
    _confluent_order(beta, gamma, delta)
    z_grid = _increasing_grid(z_grid, "z_grid")
    if z_grid[0] <= 0:
        raise PreconditionError("z_grid must be positive")
    ratios, rels = [], []
    for z in z_grid:
        num = phi_integral(beta, gamma, z, ext.p, ext.q, config)
        den = num if gamma == delta else phi_integral(beta, delta, z, ext.p, ext.q, config)
        ratios.append(num.value / den.value)
        rels.append(num.rel_error + den.rel_error)
    params = dict(beta=beta, gamma=gamma, delta=delta, p=ext.p, q=ext.q, z_grid=z_grid)
    return _monotone_verdict("ratio_monotone", params, ratios, rels, True, flip)


def check_contiguous_product(beta, gamma, delta, ext=None, z=1.0, *, config: QuadratureConfig | None = None,
                             flip=False):
    """``gamma Phi(b; g) Phi(b+1; d+1) <= delta Phi(b+1; g+1) Phi(b; d)`` at ``z``."""
    ext = _ext(ext)
    _confluent_order(beta, gamma, delta)

    def P(b, g):
        return phi_integral(b, g, z, ext.p, ext.q, config)

    f_g, f_d1, f_g1, f_d = P(beta, gamma), P(beta + 1, delta + 1), P(beta + 1, gamma + 1), P(beta, delta)
    params = dict(beta=beta, gamma=gamma, delta=delta, z=z, p=ext.p, q=ext.q)
    return _verdict("contiguous_product", params, gamma * (f_g.value * f_d1.value),
                    delta * (f_g1.value * f_d.value),
                    [r.rel_error for r in (f_g, f_d1, f_g1, f_d)], flip)


def check_logconvex_z(beta, gamma, z1, z2, alpha, ext=None, *, config: QuadratureConfig | None = None,
                      flip=False):
    """``Phi(alpha z1 + (1-alpha) z2) <= Phi(z1)^alpha Phi(z2)^(1-alpha)`` for any real ``z1, z2``."""
    ext = _ext(ext)
    alpha = _weight(alpha)
    if not gamma > beta > 0:
        raise PreconditionError(f"need gamma > beta > 0, got {beta}, {gamma}")
    zm = alpha * z1 + (1 - alpha) * z2
    mid = phi_integral(beta, gamma, zm, ext.p, ext.q, config)
    f1 = phi_integral(beta, gamma, z1, ext.p, ext.q, config)
    f2 = phi_integral(beta, gamma, z2, ext.p, ext.q, config)
    params = dict(beta=beta, gamma=gamma, z1=z1, z2=z2, alpha=alpha, p=ext.p, q=ext.q)
    return _verdict("logconvex_z", params, mid.value, f1.value ** alpha * f2.value ** (1 - alpha),
                    [mid.rel_error, f1.rel_error, f2.rel_error], flip)


def check_phi_logconvex_pq(beta, gamma, z, p1, q1, p2, q2, alpha, *, config: QuadratureConfig | None = None,
                           flip=False):
    """``(p, q) -> Phi_{p,q}(beta; gamma; z)`` is log-convex, checked at one convex combination."""
    alpha = _weight(alpha)
    if not gamma > beta > 0:
        raise PreconditionError(f"need gamma > beta > 0, got {beta}, {gamma}")
    if not z > 0:
        raise PreconditionError(f"z must be > 0, got {z!r}")
    if min(p1, q1, p2, q2) <= 0:
        raise PreconditionError("extension parameters must be > 0")
    pm = alpha * p1 + (1 - alpha) * p2
    qm = alpha * q1 + (1 - alpha) * q2
    mid = phi_integral(beta, gamma, z, pm, qm, config)
    f1 = phi_integral(beta, gamma, z, p1, q1, config)
    f2 = phi_integral(beta, gamma, z, p2, q2, config)
    params = dict(beta=beta, gamma=gamma, z=z, p1=p1, q1=q1, p2=p2, q2=q2, alpha=alpha)
    return _verdict("phi_logconvex_pq", params, mid.value, f1.value ** alpha * f2.value ** (1 - alpha),
                    [mid.rel_error, f1.rel_error, f2.rel_error], flip)


def _weighted_phi_ratios(betas, gamma, sigma, ext, z, config):
    """Ratios ``Phi(b+s)/Phi(b)`` with their relative errors, one per grid point."""
    out = []
    for b in betas:
        hi = phi_integral(b + sigma, gamma, z, ext.p, ext.q, config)
        lo = hi if sigma == 0 else phi_integral(b, gamma, z, ext.p, ext.q, config)
        out.append((hi.value / lo.value, hi.rel_error + lo.rel_error))
    return out


def check_beta_ratio_decreasing(beta_grid, gamma, sigma, ext=None, z=1.0, *,
                                config: QuadratureConfig | None = None, flip=False):
    """``b -> B(b, g-b) Phi(b+s; g; z) / (B(b+s, g-b-s) Phi(b; g; z))`` is nonincreasing over ``beta_grid``.

    The weights ``B(b, g-b)`` and ``B(b+s, g-b-s)`` are the normalisers of the two
    Phi values.  The variant with weights ``B(b, g)`` and ``B(b+s, g)`` is
    evaluated too and reported in ``extras`` only.
    """
    ext = _ext(ext)
    grid = _increasing_grid(beta_grid, "beta_grid")
    if sigma < 0:
        raise PreconditionError(f"sigma must be >= 0, got {sigma!r}")
    if not z > 0:
        raise PreconditionError(f"z must be > 0, got {z!r}")
    if grid[0] <= 0 or not gamma > grid[-1] + sigma:
        raise PreconditionError("need 0 < beta and beta + sigma < gamma for every grid point")
    ratios = _weighted_phi_ratios(grid, gamma, sigma, ext, z, config)
    values, rels, literal = [], [], []
    for b, (r, rel) in zip(grid, ratios):
        w = math.exp(special.log_beta(b, gamma - b) - special.log_beta(b + sigma, gamma - b - sigma))
        values.append(w * r)
        rels.append(rel + 2 * CLASSICAL_REL_ERROR)
        literal.append(math.exp(special.log_beta(b, gamma) - special.log_beta(b + sigma, gamma)) * r)
    params = dict(beta_grid=grid, gamma=gamma, sigma=sigma, z=z, p=ext.p, q=ext.q)
    literal_increase = max(b - a for a, b in zip(literal, literal[1:]))
    extras = {"literal_values": literal, "literal_max_increase": literal_increase}
    v = _monotone_verdict("beta_ratio_decreasing", params, values, rels, False, flip, extras)
    logger.info("beta_ratio_decreasing %s: status %s; variant weights B(b,g): max increase %.3g",
                params, v.status, literal_increase)
    return v


def check_remark_turan(beta, gamma, sigma, ext=None, z=1.0, *, config: QuadratureConfig | None = None,
                       flip=False):
    """``coef Phi(b+2s) Phi(b) <= Phi(b+s)^2`` with
    ``coef = B(b+s, g-b-s)^2 / (B(b+2s, g-b-2s) B(b, g-b))``.

    The coefficient built from ``B(., g)`` weights is also evaluated and its
    margin reported in ``extras``.
    """
    ext = _ext(ext)
    if sigma < 0 or beta <= 0 or not gamma > beta + 2 * sigma:
        raise PreconditionError(f"need beta > 0, sigma >= 0, gamma > beta + 2 sigma; got {beta}, {sigma}, {gamma}")
    if not z > 0:
        raise PreconditionError(f"z must be > 0, got {z!r}")
    lb = special.log_beta
    coef = math.exp(2 * lb(beta + sigma, gamma - beta - sigma) - lb(beta + 2 * sigma, gamma - beta - 2 * sigma)
                    - lb(beta, gamma - beta))
    literal_coef = math.exp(2 * lb(beta + sigma, gamma) - lb(beta + 2 * sigma, gamma) - lb(beta, gamma))

    def P(b):
        return phi_integral(b, gamma, z, ext.p, ext.q, config)

    f0, f1, f2 = P(beta), P(beta + sigma), P(beta + 2 * sigma)
    prod = f2.value * f0.value
    square = f1.value * f1.value
    extras = {"literal_coef": literal_coef, "literal_margin": square - literal_coef * prod}
    params = dict(beta=beta, gamma=gamma, sigma=sigma, z=z, p=ext.p, q=ext.q)
    v = _verdict("remark_turan", params, coef * prod, square,
                 [f2.rel_error, f0.rel_error, f1.rel_error, f1.rel_error, 3 * CLASSICAL_REL_ERROR], flip, extras)
    logger.info("remark_turan %s: status %s; variant coefficient margin %.3g", params, v.status,
                extras["literal_margin"])
    return v


CHECKERS = {
    "chebyshev_product": check_chebyshev_product,
    "logconvex_pq": check_logconvex_pq,
    "turan_pq": check_turan_pq,
    "logconvex_args": check_logconvex_args,
    "shifted_square": check_shifted_square,
    "ratio_monotone": check_ratio_monotone,
    "contiguous_product": check_contiguous_product,
    "logconvex_z": check_logconvex_z,
    "phi_logconvex_pq": check_phi_logconvex_pq,
    "beta_ratio_decreasing": check_beta_ratio_decreasing,
    "remark_turan": check_remark_turan,
}
