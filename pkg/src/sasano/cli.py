"""Command line front end: classification, construction, verification,
transformation and Laurent expansion over JSON files or stdin.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 undefined group action or failed normalization.
"""

from __future__ import annotations

import argparse
import json
import sys

from .backlund import (
    NormalizationFailed,
    UndefinedAction,
    act_word,
    parse_word,
)
from .classify import classify, construct_rational_solution
from .exactmath import laurent_expand, finite_point, INFINITY, ZERO_POINT, rat, rat_str, series_to_json
from .systems import (
    Chart,
    ChartMismatch,
    ParameterTuple,
    SolutionTuple,
    System,
    parse_system,
)
from .verify import PoleOnPath, invariant_report, numeric_crosscheck, pole_free_interval, verify_solution

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_UNDEFINED = 3


class UsageError(ValueError):
    pass


def _parse_alphas(system: System, text: str) -> ParameterTuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise UsageError("--alphas needs five comma-separated values (fifth may be 'auto')")
    from .systems import solve_last_alpha

    first_four = [rat(p) for p in parts[:4]]
    if parts[4] == "auto":
        last = solve_last_alpha(system, first_four)
    else:
        last = rat(parts[4])
    return ParameterTuple(system, (*first_four, last))


def _load_solution(path: str) -> SolutionTuple:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    return SolutionTuple.from_json(data)


def _parse_at(text: str):
    text = text.strip().lower()
    if text in ("0", "zero"):
        return ZERO_POINT
    if text in ("inf", "infinity", "oo"):
        return INFINITY
    if text.startswith("c="):
        return finite_point(rat(text[2:]))
    raise UsageError("--at must be one of: 0, inf, c=VALUE")


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload) + "\n")


def _run_classify(args) -> int:
    params = _parse_alphas(args.system, args.alphas)
    result = classify(params)
    out = {"verdict": "exists" if result.exists else "not_exists"}
    if result.exists:
        out["condition"] = result.matched_condition
    _emit(out)
    return EXIT_OK


def _run_construct(args) -> int:
    params = _parse_alphas(args.system, args.alphas)
    result = construct_rational_solution(params)
    _emit(result.to_json())
    return EXIT_OK


def _run_transform(args) -> int:
    params = _parse_alphas(args.system, args.alphas)
    w = parse_word(args.system, args.word)
    sol = _load_solution(args.solution) if args.solution else None
    new_params, new_sol = act_word(w, params, sol)
    out = {"system": new_params.system.name, "alphas": [rat_str(a) for a in new_params.alphas]}
    if new_sol is not None:
        out["solution"] = new_sol.to_json()
        out["chart"] = new_sol.chart.value
    _emit(out)
    return EXIT_OK


def _run_verify(args) -> int:
    params = _parse_alphas(args.system, args.alphas)
    sol = _load_solution(args.solution)
    checks: list = []

    ok = verify_solution(params, sol)
    checks.append(("residual", ok))

    report_json = None
    if params.system is System.B4 and sol.chart is Chart.AFFINE:
        report = invariant_report(params, sol)
        report_json = report.to_json()
        checks.append(("laurent_integrality_x", report.integrality_a))
        checks.append(("series_residue_sum_yw", report.b_inf_m1_plus_d_inf_m1 == 0))
        checks.append(("hamiltonian_integrality", report.integrality_h))
        checks.append(
            ("finite_pole_residues", all(f for _, _, f in report.finite_pole_residues))
        )

    if sol.chart is Chart.AFFINE:
        try:
            t0, t1 = pole_free_interval(sol)
            deviation = numeric_crosscheck(params, sol, t0, t1)
            checks.append(("numeric_crosscheck", deviation <= 1e-6))
        except PoleOnPath:
            pass

    all_ok = all(flag for _, flag in checks)
    if args.json:
        out = {"checks": {name: flag for name, flag in checks}, "pass": all_ok}
        if report_json is not None:
            out["invariants"] = report_json
        _emit(out)
    else:
        for name, flag in checks:
            sys.stdout.write(f"{'PASS' if flag else 'FAIL'} {name}\n")
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def _run_expand(args) -> int:
    sol = _load_solution(args.solution)
    point = _parse_at(args.at)
    order = args.order
    out = {}
    for name, comp in zip("xyzw", sol.components()):
        series = laurent_expand(comp, point, order)
        out[name] = series_to_json(series)
    _emit(out)
    return EXIT_OK


def _run_report(args) -> int:
    params = _parse_alphas(args.system, args.alphas)
    sol = _load_solution(args.solution)
    _emit(invariant_report(params, sol).to_json())
    return EXIT_OK


_RUNNERS = {
    "classify": _run_classify,
    "construct": _run_construct,
    "transform": _run_transform,
    "verify": _run_verify,
    "expand": _run_expand,
    "report": _run_report,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sasano",
        description="Exact rational-solution tools for the B4(1)/D4(1)/D5(2) systems.",
    )
    parser.add_argument("--batch", metavar="FILE.jsonl", help="process one JSON request per line")
    sub = parser.add_subparsers(dest="subcommand")

    def common(p, system=True, alphas=True):
        if system:
            p.add_argument("--system", type=parse_system, required=True, choices=list(System))
        if alphas:
            p.add_argument("--alphas", required=True, help="a0,a1,a2,a3,a4 (fifth may be 'auto')")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("classify", help="decide existence of a rational solution")
    common(p)
    p = sub.add_parser("construct", help="decide and build the rational solution")
    common(p)
    p = sub.add_parser("transform", help="apply a transformation word")
    common(p)
    p.add_argument("--word", required=True, help="e.g. 's3 T1 inv(T2)'")
    p.add_argument("--solution", help="JSON file with a solution to transform ('-' = stdin)")
    p = sub.add_parser("verify", help="check a solution symbolically and numerically")
    common(p)
    p.add_argument("--solution", required=True, help="JSON solution file ('-' = stdin)")
    p = sub.add_parser("expand", help="Laurent-expand the components of a solution")
    p.add_argument("--solution", required=True, help="JSON solution file ('-' = stdin)")
    p.add_argument("--at", required=True, help="expansion point: 0, inf, or c=VALUE")
    p.add_argument("--order", type=int, default=None, help="truncation exponent")
    p.add_argument("--json", action="store_true")
    p = sub.add_parser("report", help="Laurent/residue/Hamiltonian invariant report")
    common(p)
    p.add_argument("--solution", required=True, help="JSON solution file ('-' = stdin)")
    return parser


def _run_batch(path: str) -> int:
    worst = EXIT_OK
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh if line.strip()]
    for line in lines:
        try:
            request = json.loads(line)
            argv = [request["subcommand"]]
            for key in ("system", "alphas", "word", "solution", "at"):
                if key in request:
                    value = request[key]
                    if key == "alphas" and isinstance(value, list):
                        value = ",".join(value)
                    argv += [f"--{key}", str(value)]
            if "order" in request:
                argv += ["--order", str(request["order"])]
            if request.get("json"):
                argv += ["--json"]
            code = main(argv)
        except Exception as exc:  # keep batch lines independent
            _emit({"error": str(exc)})
            code = EXIT_USAGE
        worst = max(worst, code)
    return worst


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.batch:
        return _run_batch(args.batch)
    if not args.subcommand:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    runner = _RUNNERS[args.subcommand]
    try:
        return runner(args)
    except (UndefinedAction, NormalizationFailed) as exc:
        _emit({"error": str(exc)})
        return EXIT_UNDEFINED
    except (UsageError, ChartMismatch, PoleOnPath, ValueError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": str(exc)})
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
