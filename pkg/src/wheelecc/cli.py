"""Command-line front end: gen, verify and sweep.

`gen` prints an exact object for one n, `verify` runs every applicable
closed-form-vs-oracle check at one n, and `sweep` does that over a range,
optionally with parallel worker processes.  Output on stdout is
deterministic byte-for-byte across invocations and job counts; wall-clock
timings are only included when --timings is given (and the sweep summary
with timing goes to stderr).

Exit codes: 0 all checks pass, 1 at least one verification failure,
2 usage error (including residue-class violations in gen).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import closedform as cf
from .checks import DEFAULT_REPORT_TOL, VerificationReport, run_checks
from .circulant import ResidueClassError
from .ratq import MatrixQ, VectorQ

MAX_SWEEP_N = 200

GEN_OBJECTS = (
    "E",
    "E_minus_edge",
    "Ltilde",
    "Lhat",
    "inverse",
    "pinv",
    "w",
    "nullvecs",
    "quotient",
)


def _gen_value(obj: str, n: int):
    if obj == "E":
        return cf.ecc_matrix_wheel(n)
    if obj == "E_minus_edge":
        return cf.ecc_matrix_wheel_minus_edge(n)
    if obj == "Ltilde":
        return cf.laplacian_tilde(n)
    if obj == "Lhat":
        return cf.laplacian_hat(n)
    if obj == "inverse":
        return cf.inverse_E_closed(n)
    if obj == "pinv":
        return cf.pinv_E_closed(n)
    if obj == "w":
        return cf.weight_w(n)
    if obj == "nullvecs":
        return cf.null_vectors(n)
    if obj == "quotient":
        return cf.quotient_matrix(n)
    raise ValueError(f"unknown object {obj!r}")


def _render_gen(value, fmt: str) -> str:
    if isinstance(value, MatrixQ):
        if fmt == "json":
            return json.dumps(value.as_strings())
        if fmt == "csv":
            return "\n".join(",".join(row) for row in value.as_strings())
        return value.pretty()
    if isinstance(value, VectorQ):
        if fmt == "json":
            return json.dumps(value.as_strings())
        if fmt == "csv":
            return ",".join(value.as_strings())
        return "(" + "  ".join(value.as_strings()) + ")"
    # pair of vectors
    vecs = [v.as_strings() for v in value]
    if fmt == "json":
        return json.dumps(vecs)
    if fmt == "csv":
        return "\n".join(",".join(v) for v in vecs)
    return "\n".join("(" + "  ".join(v) + ")" for v in vecs)


def cmd_gen(obj: str, n: int, fmt: str = "pretty") -> str:
    """Serialize one closed-form object; raises ResidueClassError or ValueError."""
    return _render_gen(_gen_value(obj, n), fmt)


def cmd_verify(n: int, tol: float = DEFAULT_REPORT_TOL) -> VerificationReport:
    return run_checks(n, tol)


def _sweep_worker(args: tuple[int, float]) -> VerificationReport:
    n, tol = args
    return run_checks(n, tol)


def cmd_sweep(
    n_min: int,
    n_max: int,
    jobs: int = 1,
    tol: float = DEFAULT_REPORT_TOL,
    max_n_override: bool = False,
) -> list[VerificationReport]:
    """Verify every n in [n_min, n_max]; deterministic order regardless of jobs."""
    if n_min < 4 or n_max < n_min:
        raise ValueError(f"invalid range {n_min}..{n_max}; need 4 <= n_min <= n_max")
    if n_max > MAX_SWEEP_N and not max_n_override:
        raise ValueError(
            f"n_max = {n_max} exceeds the dense-exact guardrail {MAX_SWEEP_N}; "
            "pass --max-n-override to proceed"
        )
    work = [(n, tol) for n in range(n_min, n_max + 1)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_sweep_worker, work))
    else:
        reports = [_sweep_worker(w) for w in work]
    return sorted(reports, key=lambda r: r.n)


def _report_dict(report: VerificationReport, timings: bool) -> dict:
    checks = []
    for c in report.checks:
        entry = {
            "name": c.name,
            "status": c.status,
            "expected": c.expected,
            "actual": c.actual,
        }
        if timings:
            entry["wall_time_ms"] = round(c.wall_time_ms, 3)
        checks.append(entry)
    return {
        "n": report.n,
        "pass": report.n_pass,
        "fail": report.n_fail,
        "skip": report.n_skip,
        "checks": checks,
    }


def _render_report_json(reports: list[VerificationReport], timings: bool) -> str:
    if len(reports) == 1:
        return json.dumps(_report_dict(reports[0], timings), indent=2)
    total_fail = sum(r.n_fail for r in reports)
    first_failure = next((r.n for r in reports if not r.ok), None)
    body = {
        "n_min": reports[0].n,
        "n_max": reports[-1].n,
        "total_pass": sum(r.n_pass for r in reports),
        "total_fail": total_fail,
        "total_skip": sum(r.n_skip for r in reports),
        "first_failure": first_failure,
        "reports": [_report_dict(r, timings) for r in reports],
    }
    return json.dumps(body, indent=2)


def _csv_escape(s: str) -> str:
    if any(ch in s for ch in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def _render_report_csv(reports: list[VerificationReport], timings: bool) -> str:
    header = "n,check,status,expected,actual" + (",wall_time_ms" if timings else "")
    lines = [header]
    for r in reports:
        for c in r.checks:
            cells = [str(r.n), c.name, c.status, _csv_escape(c.expected), _csv_escape(c.actual)]
            if timings:
                cells.append(f"{c.wall_time_ms:.3f}")
            lines.append(",".join(cells))
    return "\n".join(lines)


def _render_report_pretty(reports: list[VerificationReport], timings: bool) -> str:
    lines = []
    width = max(len(c.name) for r in reports for c in r.checks)
    for r in reports:
        lines.append(f"n = {r.n}")
        for c in r.checks:
            mark = {"pass": "PASS", "fail": "FAIL", "skip": "skip"}[c.status]
            detail = c.expected if c.status == "pass" else c.actual
            if c.expected == "oracle-only":
                detail = c.actual
            suffix = f"  [{c.wall_time_ms:.1f} ms]" if timings and c.status != "skip" else ""
            lines.append(f"  {mark}  {c.name.ljust(width)}  {detail}{suffix}")
        lines.append(
            f"  -> {r.n_pass} pass, {r.n_fail} fail, {r.n_skip} skip"
        )
    total_fail = sum(r.n_fail for r in reports)
    if len(reports) > 1:
        lines.append(
            f"sweep n = {reports[0].n}..{reports[-1].n}: "
            f"{sum(r.n_pass for r in reports)} pass, {total_fail} fail, "
            f"{sum(r.n_skip for r in reports)} skip"
        )
    return "\n".join(lines)


def _render_reports(reports: list[VerificationReport], fmt: str, timings: bool) -> str:
    if fmt == "json":
        return _render_report_json(reports, timings)
    if fmt == "csv":
        return _render_report_csv(reports, timings)
    return _render_report_pretty(reports, timings)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wheelecc",
        description=(
            "Exact construction and oracle verification of wheel-graph "
            "eccentricity-matrix identities."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="print one exact object")
    p_gen.add_argument("object", choices=GEN_OBJECTS)
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    p_verify = sub.add_parser("verify", help="run all checks for one n")
    p_verify.add_argument("n", type=int)
    p_verify.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p_verify.add_argument("--tol", type=float, default=DEFAULT_REPORT_TOL,
                          help="report tolerance for the power-iteration check")
    p_verify.add_argument("--timings", action="store_true",
                          help="include wall times (breaks byte-determinism)")

    p_sweep = sub.add_parser("sweep", help="verify a range of n")
    p_sweep.add_argument("n_min", type=int)
    p_sweep.add_argument("n_max", type=int)
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p_sweep.add_argument("--tol", type=float, default=DEFAULT_REPORT_TOL)
    p_sweep.add_argument("--max-n-override", action="store_true",
                         help=f"allow n_max beyond the default guardrail of {MAX_SWEEP_N}")
    p_sweep.add_argument("--timings", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "gen":
        try:
            print(cmd_gen(args.object, args.n, args.format))
        except (ResidueClassError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return 0

    if args.command == "verify":
        try:
            report = cmd_verify(args.n, tol=args.tol)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(_render_reports([report], args.format, args.timings))
        return 0 if report.ok else 1

    # sweep
    try:
        reports = cmd_sweep(
            args.n_min,
            args.n_max,
            jobs=args.jobs,
            tol=args.tol,
            max_n_override=args.max_n_override,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_render_reports(reports, args.format, args.timings))
    total_ms = sum(c.wall_time_ms for r in reports for c in r.checks)
    max_ms = max((c.wall_time_ms for r in reports for c in r.checks), default=0.0)
    fails = sum(r.n_fail for r in reports)
    print(
        f"sweep timing: total {total_ms:.0f} ms, slowest check {max_ms:.1f} ms, "
        f"{fails} failing checks",
        file=sys.stderr,
    )
    return 0 if fails == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
