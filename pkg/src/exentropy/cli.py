"""Command-line front end: compute measures, run verification suites, sweep alpha.

Exit codes: 0 success, 1 verification found gating violations, 2 invalid
input (bad distributions, matrices, or parameters), 3 parse failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .classical import (
    ALPHA_ONE_WINDOW,
    Distribution,
    exp_entropy,
    exp_thc_entropy,
    kapur_entropy,
    renyi_entropy,
    shannon_entropy,
    thc_entropy,
)
from .errors import AlphaOutOfRange, ExentropyError
from .quantum import DensityOperator, exp_qthc, von_neumann
from .verify import (
    DEFAULT_ALPHAS,
    DEFAULT_DIMS,
    SUITE_NAMES,
    SuiteConfig,
    check_all,
    check_classical,
    check_ensemble,
    check_measurement,
    check_quantum,
    reports_to_document,
)

CLASSICAL_MEASURES = (
    "shannon",
    "hc",
    "tsallis",
    "renyi",
    "kapur",
    "exp-shannon",
    "exp-renyi",
    "exp-kapur",
    "exp-thc",
)
QUANTUM_MEASURES = ("von-neumann", "exp-qthc")
MEASURES = CLASSICAL_MEASURES + QUANTUM_MEASURES

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INVALID = 2
EXIT_PARSE = 3

__all__ = [
    "EXIT_INVALID",
    "EXIT_OK",
    "EXIT_PARSE",
    "EXIT_VIOLATIONS",
    "MEASURES",
    "format_value",
    "main",
    "read_state_file",
    "write_state_file",
]


class _ParseError(Exception):
    """Malformed command input: distributions, state files, grids."""


def format_value(x: float) -> str:
    """12 significant digits; lowercase scientific notation outside [1e-6, 1e6)."""
    v = float(x) + 0.0
    if v == 0.0 or not math.isfinite(v):
        return "%.12g" % v
    a = abs(v)
    if a >= 1e6 or a < 1e-6:
        mant, _, exp = ("%.11e" % v).partition("e")
        return mant.rstrip("0").rstrip(".") + "e" + exp
    digits = 12 - 1 - math.floor(math.log10(a))
    out = "%.*f" % (digits, v)
    if "." in out:
        out = out.rstrip("0").rstrip(".")
    return out


def read_state_file(path: str) -> np.ndarray:
    """Load a density matrix from a JSON object with keys dim, re, im."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise _ParseError(f"cannot read state file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _ParseError(f"state file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise _ParseError("state file must be an object with keys dim, re, im")
    for key in ("dim", "re", "im"):
        if key not in doc:
            raise _ParseError(f"state file is missing key {key!r}")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise _ParseError(f"dim must be a positive integer, got {dim!r}")
    try:
        re_part = np.array(doc["re"], dtype=float)
        im_part = np.array(doc["im"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise _ParseError(f"re and im must be numeric matrices: {exc}") from exc
    if re_part.shape != (dim, dim) or im_part.shape != (dim, dim):
        raise _ParseError(f"re and im must both be {dim}x{dim} row-major matrices")
    return re_part + 1j * im_part


def write_state_file(path: str, matrix) -> None:
    """Write a matrix as a state file, rounding entries to 12 significant digits."""
    a = np.asarray(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    doc = {
        "dim": a.shape[0],
        "re": [[float("%.12g" % (v + 0.0)) for v in row] for row in a.real.tolist()],
        "im": [[float("%.12g" % (v + 0.0)) for v in row] for row in a.imag.tolist()],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _parse_floats(text: str, what: str) -> list[float]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise _ParseError(f"empty entry in {what} {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise _ParseError(f"invalid {what} {text!r}: {exc}") from exc


def _parse_dims(text: str) -> tuple[int, ...]:
    t = text.strip()
    try:
        if ".." in t:
            lo, _, hi = t.partition("..")
            a, b = int(lo), int(hi)
            if b < a:
                raise _ParseError(f"empty dims range {text!r}")
            return tuple(range(a, b + 1))
        return tuple(int(p.strip()) for p in t.split(","))
    except ValueError as exc:
        raise _ParseError(f"invalid dims {text!r}: {exc}") from exc


def _need(value: float | None, flag: str, measure: str) -> float:
    if value is None:
        raise AlphaOutOfRange(f"measure {measure!r} requires {flag}")
    return value


def _escort_limit(dist: Distribution, beta: float) -> float:
    # lim_{alpha -> beta} kapur = escort-weighted mean of -ln p.
    nz = dist.probs[dist.probs > 0.0]
    w = np.power(nz, beta)
    return float(-(w * np.log(nz)).sum() / w.sum())


def _classical_value(dist: Distribution, measure: str, alpha, beta) -> float:
    if measure == "shannon":
        return shannon_entropy(dist)
    if measure == "hc":
        return thc_entropy(dist, _need(alpha, "--alpha", measure), norm="havrda_charvat")
    if measure == "tsallis":
        return thc_entropy(dist, _need(alpha, "--alpha", measure), norm="tsallis")
    if measure == "renyi":
        return renyi_entropy(dist, _need(alpha, "--alpha", measure))
    if measure == "kapur":
        return kapur_entropy(
            dist, _need(alpha, "--alpha", measure), _need(beta, "--beta", measure)
        )
    if measure == "exp-shannon":
        return exp_entropy(dist, "shannon")
    if measure == "exp-renyi":
        return exp_entropy(dist, "renyi", alpha=_need(alpha, "--alpha", measure))
    if measure == "exp-kapur":
        return exp_entropy(
            dist,
            "kapur",
            alpha=_need(alpha, "--alpha", measure),
            beta=_need(beta, "--beta", measure),
        )
    return exp_thc_entropy(dist, _need(alpha, "--alpha", measure))


def _sweep_value(dist, rho, measure: str, alpha: float, beta) -> float:
    """One sweep cell; alpha grid points at removable singularities use limits."""
    near_one = abs(alpha - 1.0) < ALPHA_ONE_WINDOW
    if measure == "von-neumann":
        return von_neumann(rho)
    if measure == "exp-qthc":
        return exp_qthc(rho, alpha)
    if measure == "shannon":
        return shannon_entropy(dist)
    if measure == "exp-shannon":
        return exp_entropy(dist, "shannon")
    if measure == "hc":
        if near_one:
            return shannon_entropy(dist) / math.log(2.0)
        return thc_entropy(dist, alpha, norm="havrda_charvat")
    if measure == "tsallis":
        if near_one:
            return shannon_entropy(dist)
        return thc_entropy(dist, alpha, norm="tsallis")
    if measure == "renyi":
        if near_one:
            return shannon_entropy(dist)
        return renyi_entropy(dist, alpha)
    if measure == "exp-renyi":
        if near_one:
            return math.exp(shannon_entropy(dist))
        return exp_entropy(dist, "renyi", alpha=alpha)
    if measure == "kapur":
        b = _need(beta, "--beta", measure)
        if abs(alpha - b) < ALPHA_ONE_WINDOW:
            return _escort_limit(dist, b)
        return kapur_entropy(dist, alpha, b)
    if measure == "exp-kapur":
        b = _need(beta, "--beta", measure)
        if abs(alpha - b) < ALPHA_ONE_WINDOW:
            return math.exp(_escort_limit(dist, b))
        return exp_entropy(dist, "kapur", alpha=alpha, beta=b)
    return exp_thc_entropy(dist, alpha)


class _UsageError(ExentropyError):
    """Command arguments that cannot be evaluated."""


def _load_sources(args, measures: list[str]):
    if (args.dist is None) == (args.state is None):
        raise _UsageError("provide exactly one of --dist or --state")
    needs_state = [m for m in measures if m in QUANTUM_MEASURES]
    needs_dist = [m for m in measures if m not in QUANTUM_MEASURES]
    if needs_state and args.state is None:
        raise _UsageError(f"measure {needs_state[0]!r} requires --state")
    if needs_dist and args.dist is None:
        raise _UsageError(f"measure {needs_dist[0]!r} requires --dist")
    dist = None
    rho = None
    if args.dist is not None:
        dist = Distribution(np.array(_parse_floats(args.dist, "distribution")))
    if args.state is not None:
        rho = DensityOperator(read_state_file(args.state))
    return dist, rho


def _cmd_compute(args) -> int:
    dist, rho = _load_sources(args, [args.measure])
    if args.measure == "von-neumann":
        value = von_neumann(rho)
    elif args.measure == "exp-qthc":
        value = exp_qthc(rho, _need(args.alpha, "--alpha", args.measure))
    else:
        value = _classical_value(dist, args.measure, args.alpha, args.beta)
    print(format_value(value))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    measures = [m.strip() for m in args.measures.split(",")]
    for m in measures:
        if m not in MEASURES:
            raise _UsageError(f"unknown measure {m!r}, expected one of {', '.join(MEASURES)}")
    if not measures:
        raise _UsageError("need at least one measure")
    if not (math.isfinite(args.alpha_min) and args.alpha_min > 0.0):
        raise _UsageError(f"--alpha-min must be positive, got {args.alpha_min!r}")
    if not (math.isfinite(args.alpha_max) and args.alpha_max > args.alpha_min):
        raise _UsageError("--alpha-max must exceed --alpha-min")
    if args.steps < 2:
        raise _UsageError(f"--steps must be at least 2, got {args.steps!r}")
    dist, rho = _load_sources(args, measures)
    grid = np.linspace(args.alpha_min, args.alpha_max, args.steps)
    print("alpha,measure,value")
    for measure in measures:
        for alpha in grid:
            value = _sweep_value(dist, rho, measure, float(alpha), args.beta)
            print(f"{format_value(alpha)},{measure},{format_value(value)}")
    return EXIT_OK


def _print_summary(reports) -> None:
    for rep in reports:
        print(f"suite {rep.suite}: {rep.gating_violations} gating violations")
        for rec in rep.properties:
            status = "pass" if rec.violation_count == 0 else "FAIL"
            kind = "gating" if rec.gating else "exploratory"
            worst = "n/a" if rec.worst_margin is None else format_value(rec.worst_margin)
            print(
                f"  {status} {rec.name} [{kind}] checks={rec.checks}"
                f" violations={rec.violation_count} worst_margin={worst}"
            )
    print(f"total gating violations: {sum(r.gating_violations for r in reports)}")


def _cmd_verify(args) -> int:
    dims = _parse_dims(args.dims) if args.dims else DEFAULT_DIMS
    alphas = tuple(_parse_floats(args.alphas, "alphas")) if args.alphas else DEFAULT_ALPHAS
    cfg = SuiteConfig(seed=args.seed, trials=args.trials, dims=dims, alphas=alphas)
    if args.suite == "all":
        reports = check_all(cfg)
        doc = reports_to_document(reports)
    else:
        runner = {
            "classical": check_classical,
            "quantum": check_quantum,
            "measurement": check_measurement,
            "ensemble": check_ensemble,
        }[args.suite]
        reports = [runner(cfg)]
        doc = reports[0].to_dict()
    _print_summary(reports)
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    gating = sum(r.gating_violations for r in reports)
    return EXIT_VIOLATIONS if gating else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exentropy",
        description="Exponential type-alpha entropy toolkit: compute, verify, sweep.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="evaluate one measure on one input")
    comp.add_argument("--dist", help="comma-separated probabilities, e.g. 0.5,0.5")
    comp.add_argument("--state", help="path to a JSON state file with keys dim, re, im")
    comp.add_argument("--measure", required=True, choices=MEASURES)
    comp.add_argument("--alpha", type=float, help="order parameter")
    comp.add_argument("--beta", type=float, help="second order parameter (kapur)")
    comp.set_defaults(func=_cmd_compute)

    ver = sub.add_parser("verify", help="run seeded property-verification suites")
    ver.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--trials", type=int, default=200)
    ver.add_argument("--dims", help="dimension range like 2..8 or list like 2,4,8")
    ver.add_argument("--alphas", help="comma-separated alpha grid")
    ver.add_argument("--report", help="write the JSON report here instead of stdout")
    ver.set_defaults(func=_cmd_verify)

    sw = sub.add_parser("sweep", help="tabulate measures over an alpha grid as CSV")
    sw.add_argument("--dist", help="comma-separated probabilities")
    sw.add_argument("--state", help="path to a JSON state file")
    sw.add_argument("--measures", required=True, help="comma-separated measure names")
    sw.add_argument("--alpha-min", type=float, required=True)
    sw.add_argument("--alpha-max", type=float, required=True)
    sw.add_argument("--steps", type=int, required=True)
    sw.add_argument("--beta", type=float, help="second order parameter (kapur)")
    sw.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ExentropyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
