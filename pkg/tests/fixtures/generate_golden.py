#!/usr/bin/env python3
"""Regenerate ``golden.json``: high-precision reference values computed with mpmath.

Every quadrature value is computed at two working precisions (40 and 50
digits) and the script refuses to write unless they agree to 32 significant
digits.  Nothing here imports ``pqspecial``; the values are independent of the
library code they are used to check.

    python tests/fixtures/generate_golden.py
"""

import json
from pathlib import Path

import mpmath as mp

OUT = Path(__file__).with_name("golden.json")
DIGITS = 36


def ext_beta(x, y, p, q):
    x, y, p, q = map(mp.mpf, (x, y, p, q))
    if p == 0 and q == 0:
        return mp.beta(x, y)
    half = mp.mpf(1) / 2
    f = lambda t: t ** (x - 1) * (1 - t) ** (y - 1) * mp.exp(-p / t - q / (1 - t))
    if p == 0:
        # t = u**(1/x) removes the algebraic singularity at t = 0
        left = mp.quad(lambda u: f(u ** (1 / x)) * u ** (1 / x - 1) / x, [0, half ** x])
    else:
        left = mp.quad(f, [0, mp.mpf(1) / 4, half])
    if q == 0:
        right = mp.quad(lambda u: f(1 - u ** (1 / y)) * u ** (1 / y - 1) / y, [0, half ** y])
    else:
        right = mp.quad(f, [half, mp.mpf(3) / 4, 1])
    return left + right


def gamma_p(z, p):
    z, p = mp.mpf(z), mp.mpf(p)
    return mp.quad(lambda t: t ** (z - 1) * mp.exp(-t - p / t), [0, 1, 4, mp.inf])


def phi(b, g, z, p, q):
    b, g, z, p, q = map(mp.mpf, (b, g, z, p, q))
    if p == 0 and q == 0:
        return mp.hyp1f1(b, g, z)
    f = lambda t: t ** (b - 1) * (1 - t) ** (g - b - 1) * mp.exp(z * t - p / t - q / (1 - t))
    return mp.quad(f, [0, mp.mpf(1) / 4, mp.mpf(1) / 2, mp.mpf(3) / 4, 1]) / mp.beta(b, g - b)


def phi_by_series(b, g, z, p, q):
    b, g, z = map(mp.mpf, (b, g, z))
    total, n, coef = mp.mpf(0), 0, mp.mpf(1)
    while True:
        term = ext_beta(b + n, g - b, p, q) / mp.beta(b, g - b) * coef
        total += term
        if n > 5 and abs(term) < mp.mpf(10) ** (-mp.mp.dps - 2) * abs(total):
            return total
        n += 1
        coef = coef * z / n


def phi_nth_derivative(b, g, z, p, q, n):
    return mp.diff(lambda zz: phi(b, g, zz, p, q), mp.mpf(z), n)


def twice(fn, *args):
    """Evaluate at two precisions and insist on agreement."""
    with mp.workdps(40):
        lo = fn(*args)
    with mp.workdps(50):
        hi = fn(*args)
    with mp.workdps(50):
        rel = abs(lo - hi) / abs(hi)
        if rel > mp.mpf(10) ** -32:
            raise RuntimeError(f"{fn.__name__}{args}: precisions disagree (rel {rel})")
        return hi


def s(v):
    return mp.nstr(v, DIGITS, strip_zeros=False)


def main():
    mp.mp.dps = 50
    values = []

    def add(ident, function, args, value, note):
        values.append({"id": ident, "function": function, "args": args,
                       "value": s(value), "note": note})

    # integrals behind the quadrature and extended-function examples
    v = twice(ext_beta, 1, 1, 1, 1)
    add("ebeta_1_1_p1_q1", "extended_beta", {"x": 1, "y": 1, "p": 1, "q": 1}, v,
        "integral of exp(-1/t - 1/(1-t)) over (0,1)")
    v = twice(gamma_p, 0.5, 1)
    closed = mp.sqrt(mp.pi) * mp.exp(-2)
    assert abs(v - closed) < mp.mpf(10) ** -40
    add("gamma_p_half_p1", "gamma_p", {"z": 0.5, "p": 1}, v, "sqrt(pi) exp(-2)")
    v = twice(gamma_p, 1, 1)
    assert abs(v - 2 * mp.besselk(1, 2)) < mp.mpf(10) ** -40
    add("gamma_p_1_p1", "gamma_p", {"z": 1, "p": 1}, v, "2 K_1(2)")
    add("gamma_p_3.5_p0.25", "gamma_p", {"z": 3.5, "p": 0.25}, twice(gamma_p, 3.5, 0.25),
        "closed form 2 p^(z/2) K_z(2 sqrt p)")
    add("ebeta_2_3_p1_q1", "extended_beta", {"x": 2, "y": 3, "p": 1, "q": 1},
        twice(ext_beta, 2, 3, 1, 1), "")
    add("ebeta_1_2_p0.5_q1.5", "extended_beta", {"x": 1, "y": 2, "p": 0.5, "q": 1.5},
        twice(ext_beta, 1, 2, 0.5, 1.5), "")
    add("ebeta_-1.5_2.5_p0.75_q0.2", "extended_beta", {"x": -1.5, "y": 2.5, "p": 0.75, "q": 0.2},
        twice(ext_beta, -1.5, 2.5, 0.75, 0.2), "negative x admissible when p > 0")
    add("ebeta_0.3_4_p0_q2", "extended_beta", {"x": 0.3, "y": 4, "p": 0, "q": 2},
        twice(ext_beta, 0.3, 4, 0, 2), "singular at t=0, damped at t=1")

    v = twice(phi, 1.5, 3, 2, 1, 0.5)
    with mp.workdps(45):
        vs = phi_by_series(1.5, 3, 2, 1, 0.5)
    assert abs(vs - v) / v < mp.mpf(10) ** -35, (vs, v)
    add("phi_1.5_3_z2_p1_q0.5", "phi", {"beta": 1.5, "gamma": 3, "z": 2, "p": 1, "q": 0.5}, v,
        "series and integral representations agree")
    reflected = mp.exp(2) * twice(phi, 1.5, 3, -2, 0.5, 1)
    assert abs(reflected - v) / v < mp.mpf(10) ** -35
    add("phi_1.5_3_z-2_p0.5_q1", "phi", {"beta": 1.5, "gamma": 3, "z": -2, "p": 0.5, "q": 1},
        twice(phi, 1.5, 3, -2, 0.5, 1), "reflected partner of phi_1.5_3_z2_p1_q0.5")
    add("phi_0.5_1.5_z-4_p0.3_q0.7", "phi", {"beta": 0.5, "gamma": 1.5, "z": -4, "p": 0.3, "q": 0.7},
        twice(phi, 0.5, 1.5, -4, 0.3, 0.7), "")
    add("phi_2_4_z5_p0_q0", "phi", {"beta": 2, "gamma": 4, "z": 5, "p": 0, "q": 0},
        twice(phi, 2, 4, 5, 0, 0), "classical Kummer 1F1")

    with mp.workdps(40):
        d = phi_nth_derivative(1.5, 3, 0.5, 1, 1, 2)
        b, g, z, p, q = map(mp.mpf, (1.5, 3, 0.5, 1, 1))
        under = mp.quad(lambda t: t ** 2 * t ** (b - 1) * (1 - t) ** (g - b - 1)
                        * mp.exp(z * t - p / t - q / (1 - t)), [0, 0.5, 1]) / mp.beta(b, g - b)
        assert abs(d - under) / under < mp.mpf(10) ** -30, (d, under)
    add("phi_d2_1.5_3_z0.5_p1_q1", "phi_derivative",
        {"beta": 1.5, "gamma": 3, "z": 0.5, "p": 1, "q": 1, "n": 2}, d,
        "numerical differentiation of the integral, cross-checked by differentiating under the integral")

    verdicts = []

    def verdict(checker, kwargs, lhs, rhs, note=""):
        verdicts.append({"checker": checker, "kwargs": kwargs, "lhs": s(lhs), "rhs": s(rhs),
                         "margin": s(rhs - lhs), "status": "holds" if rhs > lhs else "violated",
                         "note": note})

    B = lambda x, y, p, q: twice(ext_beta, x, y, p, q)
    P = lambda b, g, z, p, q: twice(phi, b, g, z, p, q)
    cb = lambda x, y: mp.beta(mp.mpf(x), mp.mpf(y))

    verdict("chebyshev_product", {"x": 3, "y": 4, "x1": 2, "y1": 3, "p": 1, "q": 1},
            B(3, 3, 1, 1) * B(2, 4, 1, 1), B(2, 3, 1, 1) * B(3, 4, 1, 1),
            "stated direction fails; the reverse inequality holds")
    verdict("logconvex_pq", {"x": 2, "y": 2, "p1": 0.5, "q1": 0.5, "p2": 2, "q2": 2, "alpha": 0.5},
            B(2, 2, 1.25, 1.25), mp.sqrt(B(2, 2, 0.5, 0.5) * B(2, 2, 2, 2)))
    verdict("turan_pq", {"x": 2, "y": 3, "p": 1, "q": 1, "a": 0.5},
            B(2, 3, 1, 1) ** 2, B(2, 3, 1.5, 1.5) * B(2, 3, 0.5, 0.5))
    verdict("logconvex_args", {"x1": 1, "y1": 2, "x2": 3, "y2": 1, "c": 0.5, "p": 0, "q": 0},
            cb(2, 1.5), mp.sqrt(cb(1, 2) * cb(3, 1)))
    verdict("shifted_square", {"x": 2, "y": 3, "a": 0.5, "b": 0.5, "p": 0, "q": 0},
            cb(2, 3) ** 2, cb(2.5, 3.5) * cb(1.5, 2.5))
    verdict("shifted_square", {"x": 2, "y": 3, "a": 1, "b": -1, "p": 1, "q": 1},
            B(2, 3, 1, 1) ** 2, B(3, 2, 1, 1) * B(1, 4, 1, 1))

    zs = [mp.mpf(k) * 5 / 8 for k in range(1, 9)]
    ratios = [P(0.5, 2.5, z, 1, 0.5) / P(0.5, 1.5, z, 1, 0.5) for z in zs]
    diffs = [ratios[k + 1] - ratios[k] for k in range(7)]
    k = min(range(7), key=lambda i: diffs[i])
    verdict("ratio_monotone", {"beta": 0.5, "gamma": 2.5, "delta": 1.5, "p": 1, "q": 0.5,
                               "z_grid": [float(z) for z in zs]},
            ratios[k], ratios[k + 1], "ratio decreases: stated increase fails")
    verdict("contiguous_product", {"beta": 0.5, "gamma": 2, "delta": 1.5, "z": 2, "p": 0.5, "q": 1},
            2 * P(0.5, 2, 2, 0.5, 1) * P(1.5, 2.5, 2, 0.5, 1),
            1.5 * P(1.5, 3, 2, 0.5, 1) * P(0.5, 1.5, 2, 0.5, 1),
            "stated direction fails")
    verdict("contiguous_product", {"beta": 1, "gamma": 3, "delta": 2, "z": 1, "p": 0, "q": 0},
            3 * P(1, 3, 1, 0, 0) * P(2, 3, 1, 0, 0), 2 * P(2, 4, 1, 0, 0) * P(1, 2, 1, 0, 0),
            "stated direction fails")
    verdict("logconvex_z", {"beta": 1.5, "gamma": 3, "z1": -2, "z2": 1, "alpha": 0.3, "p": 1, "q": 0.5},
            P(1.5, 3, mp.mpf(0.3) * -2 + mp.mpf(0.7) * 1, 1, 0.5),
            P(1.5, 3, -2, 1, 0.5) ** mp.mpf(0.3) * P(1.5, 3, 1, 1, 0.5) ** mp.mpf(0.7))
    verdict("phi_logconvex_pq", {"beta": 1, "gamma": 2, "z": 1, "p1": 0.5, "q1": 0.5, "p2": 2, "q2": 2,
                                 "alpha": 0.5},
            P(1, 2, 1, 1.25, 1.25), mp.sqrt(P(1, 2, 1, 0.5, 0.5) * P(1, 2, 1, 2, 2)))

    def weighted(b, g, s_, z, p, q):
        return cb(b, g - b) * P(b + s_, g, z, p, q) / (cb(b + s_, g - b - s_) * P(b, g, z, p, q))

    r0, r1 = weighted(0.5, 3, 0.5, 2, 1, 0.5), weighted(1, 3, 0.5, 2, 1, 0.5)
    verdict("beta_ratio_decreasing", {"beta_grid": [0.5, 1], "gamma": 3, "sigma": 0.5, "z": 2,
                                      "p": 1, "q": 0.5}, r1, r0)
    b, g, s_, z = 0.5, 4, 1, 2
    coef = cb(b + s_, g - b - s_) ** 2 / (cb(b + 2 * s_, g - b - 2 * s_) * cb(b, g - b))
    verdict("remark_turan", {"beta": b, "gamma": g, "sigma": s_, "z": z, "p": 1, "q": 1},
            coef * P(b + 2 * s_, g, z, 1, 1) * P(b, g, z, 1, 1), P(b + s_, g, z, 1, 1) ** 2)

    OUT.write_text(json.dumps({"digits": DIGITS, "values": values, "verdicts": verdicts}, indent=1) + "\n")
    print(f"wrote {len(values)} values and {len(verdicts)} verdicts to {OUT}")


if __name__ == "__main__":
    main()
