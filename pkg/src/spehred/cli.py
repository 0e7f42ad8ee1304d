"""Command-line front end.

Exit codes: 0 success, 1 computation-level failure (evaluation at a pole,
failed certificate), 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import mpmath

from .certifier import certify_discrete, certify_supercuspidal
from .classifier import (
    candidate_points,
    classify,
    coprime_bruteforce,
    coprime_closed_form,
    exceptional_points,
    pole_matrix,
)
from .halfint import HalfInt
from .lfactor import EVAL_PREC, EvaluationAtPole, lf_eval
from .normalization import alpha, beta, c_psi, gamma
from .speh import InductionProblem

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

SWEEP_COLUMNS = (
    "a", "b", "c", "d",
    "coprime_closed", "coprime_brute", "candidates", "theorem_only", "certified",
)
SWEEP_MAX = 64


class UsageError(Exception):
    pass


@dataclass
class SweepSpec:
    a: range
    b: range
    c: range
    d: range
    out: str | None = None
    format: str = "csv"
    filters: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for name in "abcd":
            r = getattr(self, name)
            if len(r) == 0:
                raise UsageError(f"empty range for {name}")
            if r.start < 1 or r[-1] > SWEEP_MAX:
                raise UsageError(f"range for {name} must lie in [1, {SWEEP_MAX}]")
        if self.format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.format!r}")
        for f in self.filters:
            if f not in ("noncoprime", "exceptional"):
                raise UsageError(f"unknown filter {f!r}")

    def problems(self):
        for a, b, c, d in itertools.product(self.a, self.b, self.c, self.d):
            yield InductionProblem(a, b, c, d)


def _fmt_point(w: HalfInt, coords: str) -> str:
    return str(w.halved()) if coords == "s" else str(w)


def factors_report(p: InductionProblem) -> dict:
    al, be, ga = alpha(p), beta(p), gamma(p)
    out = {
        "problem": p.to_json(),
        "alpha": al.to_json(),
        "beta": be.to_json(),
        "gamma": ga.to_json(),
        "poles": {"alpha": al.poles().to_json(), "beta": be.poles().to_json()},
    }
    if p.c == p.d:
        cp = c_psi(p)
        out["c_psi"] = {
            "factors": cp.to_json(),
            "poles": cp.poles().to_json(),
            "zeros": cp.zeros().to_json(),
        }
    return out


def classify_report(p: InductionProblem) -> dict:
    verdicts = classify(p)
    return {
        "problem": p.to_json(),
        "verdicts": [v.to_json() for v in verdicts],
        "exceptional": [str(w) for w in sorted(exceptional_points(p))],
    }


def certify_report(p: InductionProblem) -> tuple[dict, bool]:
    cert = certify_discrete(p)
    out = cert.to_json()
    ok = cert.verdict
    if p.a == 1 and p.b == 1:
        sc = certify_supercuspidal(p.c, p.d)
        out["supercuspidal"] = sc.to_json()
        ok = ok and sc.verdict
    return out, ok


def sweep_row(p: InductionProblem) -> dict:
    return {
        "a": p.a,
        "b": p.b,
        "c": p.c,
        "d": p.d,
        "coprime_closed": coprime_closed_form(p),
        "coprime_brute": coprime_bruteforce(p),
        "candidates": len(candidate_points(p)),
        "theorem_only": len(exceptional_points(p)),
        "certified": certify_discrete(p).verdict,
    }


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[dict]:
    problems = list(spec.problems())
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(sweep_row, problems, chunksize=64))
    else:
        rows = [sweep_row(p) for p in problems]
    if "noncoprime" in spec.filters:
        rows = [r for r in rows if not r["coprime_closed"]]
    if "exceptional" in spec.filters:
        rows = [r for r in rows if r["theorem_only"] > 0]
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: (str(v).lower() if isinstance(v, bool) else v) for k, v in r.items()})
    return buf.getvalue()


def eval_report(p: InductionProblem, q: str, s: str) -> dict:
    with mpmath.workprec(EVAL_PREC):
        w = 2 * mpmath.mpf(s)
        a_val = lf_eval(alpha(p), q, w, "alpha")
        b_val = lf_eval(beta(p), q, w, "beta")
        g_val = lf_eval(gamma(p), q, w, "gamma")
        ratio = a_val / b_val
        disc = abs(g_val - ratio) / abs(ratio) if ratio != 0 else abs(g_val)
    return {
        "problem": p.to_json(),
        "q": q,
        "s": s,
        "w": mpmath.nstr(w, 20),
        "alpha": float(a_val),
        "beta": float(b_val),
        "gamma": float(g_val),
        "relative_discrepancy": float(disc),
    }


def _add_problem_args(sp: argparse.ArgumentParser):
    for name in "abcd":
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.add_argument("--tau-rank", type=int, default=1)


def _problem(args) -> InductionProblem:
    values = [args.a, args.b, args.c, args.d, args.tau_rank]
    if any(v < 1 for v in values):
        raise UsageError("parameters must be ≥ 1")
    return InductionProblem(args.a, args.b, args.c, args.d, args.tau_rank)


def _parse_range(text: str) -> range:
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected LO:HI")
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spehred",
        description="Normalization factors and reducibility points for products of two Speh representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("factors", help="alpha, beta, gamma (and C_psi when c = d)")
    _add_problem_args(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("classify", help="candidate reducibility points and their tiers")
    _add_problem_args(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--coords", choices=("w", "s"), default="w")

    sp = sub.add_parser("matrix", help="pole matrix of alpha or beta")
    _add_problem_args(sp)
    sp.add_argument("--which", choices=("alpha", "beta"), default="alpha")
    sp.add_argument("--format", choices=("text", "latex"), default="text")

    sp = sub.add_parser("certify", help="holomorphy certificate (exit 0 iff it passes)")
    _add_problem_args(sp)

    sp = sub.add_parser("sweep", help="tabulate a grid of problems")
    sp.add_argument("--max", type=int, help="shorthand for 1:MAX on every parameter")
    for name in "abcd":
        sp.add_argument(f"--{name}-range", help="inclusive LO:HI")
    sp.add_argument("--out", help="output file (stdout if omitted)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--only-noncoprime", action="store_true")
    sp.add_argument("--only-exceptional", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("eval", help="numeric values of alpha, beta, gamma")
    _add_problem_args(sp)
    sp.add_argument("--q", required=True)
    sp.add_argument("--s", required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _cmd_factors(args, out) -> int:
    p = _problem(args)
    if args.format == "json":
        print(json.dumps(factors_report(p), indent=2), file=out)
        return EXIT_OK
    al, be = alpha(p), beta(p)
    print(f"alpha = {al.as_fraction()}", file=out)
    print(f"beta = {be.as_fraction()}", file=out)
    print(f"gamma = {gamma(p).as_fraction()}", file=out)
    print(f"poles(alpha) = {al.poles().to_json()}", file=out)
    print(f"poles(beta) = {be.poles().to_json()}", file=out)
    if p.c == p.d:
        cp = c_psi(p)
        print(f"c_psi = {cp}", file=out)
        print(f"poles(c_psi) = {cp.poles().to_json()}  zeros(c_psi) = {cp.zeros().to_json()}", file=out)
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    p = _problem(args)
    if args.format == "json":
        report = classify_report(p)
        report["coords"] = args.coords
        print(json.dumps(report, indent=2), file=out)
        return EXIT_OK
    label = "2s" if args.coords == "w" else "s"
    print(f"{label:>6} {'beta':>5} {'alpha':>5} {'dual':>5}  tier", file=out)
    for v in classify(p):
        print(
            f"{_fmt_point(v.point, args.coords):>6} {v.beta_order:>5} {v.alpha_order:>5} "
            f"{v.dual_alpha_order:>5}  {v.tier.value}",
            file=out,
        )
    exc = sorted(exceptional_points(p))
    body = ", ".join(_fmt_point(w, args.coords) for w in exc)
    print(f"exceptional ({label}): {{{body}}}", file=out)
    return EXIT_OK


def _cmd_matrix(args, out) -> int:
    m = pole_matrix(_problem(args), args.which)
    print(m.to_latex() if args.format == "latex" else m.to_text(), file=out)
    return EXIT_OK


def _cmd_certify(args, out) -> int:
    report, ok = certify_report(_problem(args))
    print(json.dumps(report, indent=2), file=out)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_sweep(args, out) -> int:
    ranges = {}
    for name in "abcd":
        text = getattr(args, f"{name}_range")
        if text is not None:
            ranges[name] = _parse_range(text)
        elif args.max is not None:
            ranges[name] = range(1, args.max + 1)
        else:
            raise UsageError(f"no range for {name}: pass --max or --{name}-range")
    filters = tuple(
        f for f, on in (("noncoprime", args.only_noncoprime), ("exceptional", args.only_exceptional)) if on
    )
    spec = SweepSpec(**ranges, out=args.out, format=args.format, filters=filters)
    rows = run_sweep(spec, jobs=max(1, args.jobs))
    text = rows_to_csv(rows) if spec.format == "csv" else json.dumps(rows, indent=1) + "\n"
    if spec.out is None:
        out.write(text)
        return EXIT_OK
    try:
        with open(spec.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {spec.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_eval(args, out) -> int:
    p = _problem(args)
    try:
        q = mpmath.mpf(args.q)
        mpmath.mpf(args.s)
    except (ValueError, TypeError):
        raise UsageError("q and s must be real numbers")
    if not q > 1:
        raise UsageError("q must be > 1")
    try:
        report = eval_report(p, args.q, args.s)
    except EvaluationAtPole as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        print(json.dumps(report, indent=2), file=out)
    else:
        for key in ("alpha", "beta", "gamma", "relative_discrepancy"):
            print(f"{key} = {report[key]!r}", file=out)
    return EXIT_OK if report["relative_discrepancy"] < 1e-10 else EXIT_FAIL


COMMANDS = {
    "factors": _cmd_factors,
    "classify": _cmd_classify,
    "matrix": _cmd_matrix,
    "certify": _cmd_certify,
    "sweep": _cmd_sweep,
    "eval": _cmd_eval,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
