"""``pq-special`` command line: eval, verify and sweep.

Exit codes: 0 success, 2 usage or domain error, 3 non-convergence,
4 at least one violated verdict.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from contextlib import contextmanager

import numpy as np

from . import extended, special
from .errors import IntegrandError, PQSpecialError
from .extended import CLASSICAL_REL_ERROR, SeriesConfig
from .inequalities import CHECKERS
from .quadrature import DEFAULT_CONFIG, QuadratureResult
from .suite import GridSpec, run_suite, write_cases_csv

logger = logging.getLogger("pqspecial")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 3
EXIT_VIOLATED = 4

ALIASES = {"β": "beta", "γ": "gamma"}


class UsageError(Exception):
    pass


def _classical(fn, names):
    def run(args, qconf, sconf):
        value = fn(*(args[n] for n in names))
        return QuadratureResult(value, abs(value) * CLASSICAL_REL_ERROR, 1, True)

    return run


def _quad(fn, names, optional=()):
    def run(args, qconf, sconf):
        extra = {k: args[k] for k in optional if k in args}
        return fn(*(args[n] for n in names), **extra, config=qconf)

    return run


def _series(args, qconf, sconf):
    return extended.phi_series(args["beta"], args["gamma"], args["z"], args.get("p", 0.0), args.get("q", 0.0),
                               sconf=sconf, qconf=qconf)


# name -> (required args, optional args, runner)
FUNCTIONS = {
    "gamma": (("x",), (), _classical(special.gamma, ("x",))),
    "beta": (("x", "y"), (), _classical(special.beta, ("x", "y"))),
    "gamma_p": (("z",), ("p",), _quad(extended.gamma_p, ("z",), ("p",))),
    "extended_beta": (("x", "y"), ("p", "q"), _quad(extended.extended_beta, ("x", "y"), ("p", "q"))),
    "extended_beta_single": (("x", "y"), ("p",), _quad(extended.extended_beta_single, ("x", "y"), ("p",))),
    "phi_series": (("beta", "gamma", "z"), ("p", "q"), _series),
    "phi_integral": (("beta", "gamma", "z"), ("p", "q"),
                     _quad(extended.phi_integral, ("beta", "gamma", "z"), ("p", "q"))),
    "phi_derivative": (("beta", "gamma", "z"), ("p", "q", "n"),
                       _quad(extended.phi_derivative, ("beta", "gamma", "z"), ("p", "q", "n"))),
}


def _number(key, text):
    try:
        if key == "n":
            return int(text)
        return float(text)
    except ValueError:
        raise UsageError(f"{key}: not a number: {text!r}") from None


def parse_assignments(items, function):
    """``["x=2", "β=0.5"]`` -> ``{"x": 2.0, "beta": 0.5}``, checked against ``function``'s signature."""
    required, optional, _ = FUNCTIONS[function]
    out = {}
    for item in items:
        key, sep, text = item.partition("=")
        if not sep:
            raise UsageError(f"expected NAME=VALUE, got {item!r}")
        key = ALIASES.get(key.strip(), key.strip())
        if key not in required and key not in optional:
            raise UsageError(f"{function} takes no argument {key!r}")
        if key in out:
            raise UsageError(f"argument {key!r} given twice")
        out[key] = _number(key, text.strip())
    return out


def parse_range(text):
    """``start:end:steps`` -> ``steps + 1`` evenly spaced points, endpoints included."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must be start:end:steps, got {text!r}")
    try:
        start, end, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"range must be start:end:steps, got {text!r}") from None
    if steps < 1:
        raise UsageError("range needs steps >= 1")
    if not start < end:
        raise UsageError("range needs start < end")
    return [float(v) for v in np.linspace(start, end, steps + 1)]


def _configs(opts):
    qconf = DEFAULT_CONFIG.with_overrides(rel_tol=opts.rel_tol, max_level=opts.max_level)
    sconf = SeriesConfig()
    if opts.rel_tol is not None or opts.max_terms is not None:
        sconf = SeriesConfig(rel_tol=opts.rel_tol or sconf.rel_tol, max_terms=opts.max_terms or sconf.max_terms)
    return qconf, sconf


def _evaluate(function, args, qconf, sconf):
    required, _, run = FUNCTIONS[function]
    missing = [k for k in required if k not in args]
    if missing:
        raise UsageError(f"{function} needs {', '.join(missing)}")
    return run(args, qconf, sconf)


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def cmd_eval(opts):
    qconf, sconf = _configs(opts)
    args = parse_assignments(opts.args, opts.function)
    r = _evaluate(opts.function, args, qconf, sconf)
    print(f"value {r.value:.17g}")
    print(f"error_estimate {r.error_estimate:.3g}")
    print(f"evaluations {r.evaluations}")
    if not r.converged:
        logger.warning("%s did not converge; value is the best estimate", opts.function)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def cmd_verify(opts):
    qconf, _ = _configs(opts)
    names = list(CHECKERS) if opts.theorem == "all" else [opts.theorem]
    if opts.theorem != "all" and opts.theorem not in CHECKERS:
        raise UsageError(f"unknown theorem {opts.theorem!r}; choose from all, {', '.join(CHECKERS)}")
    if opts.n < 0:
        raise UsageError("--n must be >= 0")
    grid = GridSpec(n=opts.n, seed=opts.seed)
    report = run_suite(grid, names, flip=opts.flip, config=qconf)
    for name in report.checkers():
        counts = report.counts(name)
        print(name, " ".join(f"{k}={v}" for k, v in counts.items()))
    total = report.counts()
    print("total", " ".join(f"{k}={v}" for k, v in total.items()))
    if opts.output:
        with _output(opts.output) as fh:
            write_cases_csv(report, fh)
    return EXIT_VIOLATED if total["violated"] else EXIT_OK


def cmd_sweep(opts):
    qconf, sconf = _configs(opts)
    name, _, text = opts.vary.partition("=")
    name = ALIASES.get(name, name)
    fixed = parse_assignments(opts.args, opts.function)
    if name in fixed:
        raise UsageError(f"{name!r} is both varied and fixed")
    parse_assignments([f"{name}=0"], opts.function)  # is it a parameter at all
    if name == "n":
        raise UsageError("n cannot be swept")
    points = parse_range(text)
    status = EXIT_OK
    with _output(opts.output) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["param", "value", "error_estimate", "note"])
        for v in points:
            try:
                r = _evaluate(opts.function, {**fixed, name: v}, qconf, sconf)
            except UsageError:
                raise
            except PQSpecialError as exc:
                w.writerow([f"{v:.17g}", "", "", str(exc)])
                continue
            note = "" if r.converged else "not converged"
            if not r.converged:
                status = EXIT_NOT_CONVERGED
            w.writerow([f"{v:.17g}", f"{r.value:.17g}", f"{r.error_estimate:.17g}", note])
            fh.flush()
    return status


def _add_tolerances(p):
    p.add_argument("--rel-tol", type=float, help="relative tolerance for quadrature and series")
    p.add_argument("--max-level", type=int, help="deepest quadrature refinement level")
    p.add_argument("--max-terms", type=int, help="series term cap (phi_series)")


def build_parser():
    parser = argparse.ArgumentParser(prog="pq-special", description="Extended (p,q) beta, gamma and confluent functions.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one function")
    p.add_argument("function", choices=sorted(FUNCTIONS))
    p.add_argument("args", nargs="*", metavar="NAME=VALUE")
    _add_tolerances(p)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("verify", help="run an inequality sweep")
    p.add_argument("theorem", help="checker name, or 'all'")
    p.add_argument("--n", type=int, default=10, help="cases per checker (default 10)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--flip", action="store_true", help="check the reversed inequalities")
    p.add_argument("--output", help="write per-case CSV here ('-' for stdout)")
    _add_tolerances(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("sweep", help="tabulate a function along one parameter")
    p.add_argument("function", choices=sorted(FUNCTIONS))
    p.add_argument("--vary", required=True, metavar="NAME=START:END:STEPS",
                   help="also accepted as two words: --vary NAME START:END:STEPS")
    p.add_argument("args", nargs="*", metavar="NAME=VALUE")
    p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; sweeps are deterministic")
    p.add_argument("--output", help="CSV path (default stdout)")
    _add_tolerances(p)
    p.set_defaults(run=cmd_sweep)
    return parser


def _join_vary(argv):
    # "--vary z -1:1:4" would make argparse read -1:1:4 as an option, and NAME=VALUE
    # positionals after an option are not collected, so the joined flag goes last
    out = []
    tail = []
    i = 0
    while i < len(argv):
        if argv[i] == "--vary" and i + 2 < len(argv) and "=" not in argv[i + 1]:
            tail.append(f"--vary={argv[i + 1]}={argv[i + 2]}")
            i += 3
        elif argv[i].startswith("--vary="):
            tail.append(argv[i])
            i += 1
        elif argv[i] == "--vary" and i + 1 < len(argv):
            tail.append(f"--vary={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out + tail


def main(argv=None):
    argv = _join_vary(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    opts = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if opts.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return opts.run(opts)
    except IntegrandError as exc:
        print(f"pq-special: error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except (UsageError, PQSpecialError, ValueError) as exc:
        print(f"pq-special: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
