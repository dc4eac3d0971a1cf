"""Command line front end.

    gm-lefschetz verify --n 1 --weights 1,0 --bundle '[{"l": 0}]'
    gm-lefschetz biseries --problem @problem.json --format text
    gm-lefschetz verify --grid

Exit codes: 0 success, 1 a verification or certificate failure, 2 invalid input.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from .adelictrace import biseries, exactness_defect, single_filtration_trace
from .cech import cech_oracle
from .cohomology import (VirtualBundle, euler_sequence, h_character, lefschetz_direct,
                         tangent_virtual_bundle)
from .errors import InvalidInputError, LefschetzError
from .exactnum import INFINITY_POINT, ZERO_POINT, RationalFunction, expand
from .localization import localize, localize_points
from .torusaction import LinearAction, is_purely_nonhyperbolic

COMMANDS = ("direct", "localize", "points", "biseries", "filtration", "cech", "verify", "defect")
FORMATS = ("json", "text")
EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2

_PROBLEM_KEYS = {"n", "weights", "bundle", "sequence", "command", "p_max", "q_max", "order",
                 "trunc", "format"}


class ProblemError(InvalidInputError):
    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


@dataclass(frozen=True)
class Problem:
    action: LinearAction
    bundle: VirtualBundle
    command: str
    p_max: int = 8
    q_max: int = 8
    order: int | None = None
    trunc: int = 6
    format: str = "json"
    sequence: tuple = field(default=())

    def to_json(self) -> dict:
        out = {"command": self.command, **self.action.to_json(), "bundle": self.bundle.to_json(),
               "p_max": self.p_max, "q_max": self.q_max, "trunc": self.trunc}
        if self.order is not None:
            out["order"] = self.order
        if self.command == "defect":
            out["sequence"] = [b.to_json() for b in self.sequence]
        return out


def _int_in(data: dict, key: str, default, low: int, high: int):
    value = data.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProblemError(key, f"must be an integer, got {value!r}")
    if not low <= value <= high:
        raise ProblemError(key, f"must lie in [{low}, {high}], got {value}")
    return value


def _bundle(value, action: LinearAction, key: str = "bundle") -> VirtualBundle:
    if value == "tangent":
        return tangent_virtual_bundle(action)
    try:
        return VirtualBundle.from_json(value)
    except InvalidInputError as exc:
        raise ProblemError(key, str(exc)) from exc


def _sequence(value, action: LinearAction) -> tuple:
    if isinstance(value, str) and value.split(":")[0] == "euler":
        twist = value.partition(":")[2] or "0"
        try:
            return tuple(euler_sequence(action, int(twist)))
        except ValueError as exc:
            raise ProblemError("sequence", f"bad twist in {value!r}") from exc
    if not isinstance(value, list):
        raise ProblemError("sequence", "must be a list of bundles or 'euler[:d]'")
    return tuple(_bundle(b, action, f"sequence[{i}]") for i, b in enumerate(value))


def parse_problem(data) -> Problem:
    """Validate a problem description (a JSON string or an already decoded dict)."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ProblemError("input", f"not valid JSON ({exc.msg})") from exc
    if not isinstance(data, dict):
        raise ProblemError("input", "must be a JSON object")
    unknown = set(data) - _PROBLEM_KEYS
    if unknown:
        raise ProblemError(sorted(unknown)[0], "unknown field")
    for key in ("n", "weights"):
        if key not in data:
            raise ProblemError(key, "missing")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ProblemError("n", f"must be a non-negative integer, got {n!r}")
    weights = data["weights"]
    if not isinstance(weights, list) or any(isinstance(w, bool) or not isinstance(w, int)
                                            for w in weights):
        raise ProblemError("weights", "must be a list of integers")
    if len(weights) != n + 1:
        raise ProblemError("weights", f"weights length must be n+1 = {n + 1}, got {len(weights)}")
    action = LinearAction(n, tuple(weights))
    command = data.get("command", "verify")
    if command not in COMMANDS:
        raise ProblemError("command", f"must be one of {', '.join(COMMANDS)}, got {command!r}")
    fmt = data.get("format", "json")
    if fmt not in FORMATS:
        raise ProblemError("format", f"must be json or text, got {fmt!r}")
    bundle = _bundle(data.get("bundle", [{"l": 0}]), action)
    sequence = _sequence(data["sequence"], action) if "sequence" in data else ()
    if command == "defect" and "sequence" not in data:
        sequence = tuple(euler_sequence(action))
    return Problem(action, bundle, command,
                   p_max=_int_in(data, "p_max", 8, 1, 64),
                   q_max=_int_in(data, "q_max", 8, 1, 64),
                   order=_int_in(data, "order", None, 0, 256),
                   trunc=_int_in(data, "trunc", 6, 1, 32),
                   format=fmt, sequence=sequence)


# -- engines --------------------------------------------------------------

def _expansions(value, order):
    if order is None:
        return {}
    return {"expansions": {pt: expand(value, pt, order).to_json()
                           for pt in (ZERO_POINT, INFINITY_POINT)}}


def _cech(problem: Problem) -> tuple:
    action = problem.action
    out, ok = [], True
    for l, c, mult in problem.bundle:
        oracle = cech_oracle(action, l, c, problem.trunc)
        agrees = oracle.same_groups(h_character(action, l, c))
        ok = ok and bool(oracle.stabilized) and agrees
        out.append({"l": l, "c": c, "mult": mult, **oracle.to_json(action.n),
                    "agrees_with_monomials": agrees})
    return {"terms": out, "passed": ok}, ok


def _run_command(problem: Problem, command: str) -> tuple:
    """(result dict, passed) for a single engine."""
    action, bundle = problem.action, problem.bundle
    if command == "direct":
        value = lefschetz_direct(action, bundle)
        return {"total": value.to_json(), **_expansions(value, problem.order)}, True
    if command == "localize":
        report = localize(action, bundle)
        return {**report.to_json(), **_expansions(report.total, problem.order)}, True
    if command == "points":
        value = localize_points(action, bundle)
        return {"total": value.to_json(), **_expansions(value, problem.order)}, True
    if command == "biseries":
        report = biseries(action, bundle, problem.p_max, problem.q_max)
        return {**report.to_json(), "passed": report.passed}, report.passed
    if command == "filtration":
        report = single_filtration_trace(action, bundle, problem.p_max)
        return {**report.to_json(), "passed": report.passed}, report.passed
    if command == "cech":
        return _cech(problem)
    if command == "defect":
        value = exactness_defect(action, problem.sequence)
        return {"defect": value.to_json(), "passed": value.is_zero()}, value.is_zero()
    raise InvalidInputError(f"unknown command {command!r}")


def _verify(problem: Problem) -> tuple:
    action = problem.action
    routes, checks = {}, {}
    direct, _ = _run_command(problem, "direct")
    routes["direct"] = direct["total"]
    local, _ = _run_command(problem, "localize")
    routes["localize"] = local["total"]
    bis, bis_ok = _run_command(problem, "biseries")
    routes["biseries"] = bis["total"]
    checks["certificates"] = bis_ok
    if len(set(action.weights)) == len(action.weights):
        routes["points"] = _run_command(problem, "points")[0]["total"]
    if is_purely_nonhyperbolic(action):
        filt, filt_ok = _run_command(problem, "filtration")
        routes["filtration"] = filt["total"]
        checks["filtration_certificates"] = filt_ok
    checks["cech"] = _cech(problem)[1]
    euler = Problem(action, problem.bundle, "defect", sequence=tuple(euler_sequence(action)))
    checks["euler_defect"] = _run_command(euler, "defect")[1]
    reference = routes["direct"]
    checks["routes_agree"] = all(v == reference for v in routes.values())
    passed = all(checks.values())
    return {"routes": routes, "parts": local["parts"], "checks": checks, "passed": passed}, passed


def run(problem: Problem) -> tuple:
    """Execute ``problem``; returns (report dict, exit code)."""
    report = {"problem": problem.to_json()}
    try:
        if problem.command == "verify":
            result, passed = _verify(problem)
        else:
            result, passed = _run_command(problem, problem.command)
    except LefschetzError as exc:
        report["error"] = diagnostic(exc)
        return report, EXIT_INVALID
    report["result"] = result
    report["status"] = "pass" if passed else "fail"
    return report, EXIT_OK if passed else EXIT_FAIL


def diagnostic(exc: Exception) -> dict:
    out = {"kind": getattr(exc, "kind", "error"), "message": str(exc)}
    if getattr(exc, "field", None):
        out["field"] = exc.field
    witness = getattr(exc, "witness", None)
    if witness is not None:
        out["witness"] = witness.to_json()
    return out


# -- rendering ------------------------------------------------------------

def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, ensure_ascii=False)
    return "\n".join(_text_lines(report))


def _rf_text(data) -> str:
    return str(RationalFunction.from_json(data))


def _text_lines(report: dict) -> list:
    lines = []
    problem = report.get("problem")
    if problem:
        lines.append(f"{problem['command']} on P^{problem['n']} with weights {problem['weights']}")
    if "error" in report:
        err = report["error"]
        lines.append(f"error ({err['kind']}): {err['message']}")
        return lines
    result = report["result"]
    for name, value in result.get("routes", {}).items():
        lines.append(f"  {name}: {_rf_text(value)}")
    for part in result.get("parts", []):
        lines.append(f"  component of weight {part['component']['weight']}: {_rf_text(part['value'])}")
    for part in result.get("per_component", []):
        lines.append(f"  component of weight {part['component']['weight']} at {part['point']}: "
                     f"{_rf_text(part['value'])}")
    for cert in result.get("certificates", []):
        where = f"p={cert['index']}" if "index" in cert else "p-sum"
        lines.append(f"  stage {cert['stage']} {where} at {cert['point']}: {cert['status']} "
                     f"valuations {cert['valuations']}")
    for term in result.get("terms", []):
        lines.append(f"  O({term['l']}) x λ^{term['c']}: stabilized={term.get('stabilized')} "
                     f"agrees={term['agrees_with_monomials']}")
    if "total" in result:
        lines.append(f"  total: {_rf_text(result['total'])}")
    if "defect" in result:
        lines.append(f"  defect: {_rf_text(result['defect'])}")
    for name, ok in result.get("checks", {}).items():
        lines.append(f"  check {name}: {'ok' if ok else 'FAILED'}")
    lines.append(f"status: {report.get('status')}")
    return lines


# -- argument handling ----------------------------------------------------

def _load(value: str) -> str:
    if value.startswith("@"):
        try:
            with open(value[1:], encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ProblemError("input", f"cannot read {value[1:]}: {exc.strerror}") from exc
    return value


def _json_arg(value: str, key: str):
    text = _load(value)
    word = text.strip()
    if key in ("bundle", "sequence") and (word == "tangent" or word.startswith("euler")):
        return word
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(key, f"not valid JSON ({exc.msg})") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gm-lefschetz",
        description="Equivariant Lefschetz numbers of linear G_m-actions on P^N.")
    parser.add_argument("command", nargs="?", choices=COMMANDS,
                        help="engine to run (default: the problem's command, else verify)")
    parser.add_argument("--problem", help="problem JSON, inline or @file")
    parser.add_argument("--n", type=int, help="dimension N of P^N")
    parser.add_argument("--weights", help="comma-separated weights a_0,...,a_N")
    parser.add_argument("--bundle", help="bundle JSON [{l, c, mult}, ...] inline or @file, or 'tangent'")
    parser.add_argument("--sequence", help="defect input: JSON list of bundles or 'euler[:d]'")
    parser.add_argument("--p-max", type=int, dest="p_max")
    parser.add_argument("--q-max", type=int, dest="q_max")
    parser.add_argument("--trunc", type=int, help="Čech pole-order truncation")
    parser.add_argument("--order", type=int, help="also print expansions at 0 and ∞ to this order")
    parser.add_argument("--format", choices=FORMATS)
    parser.add_argument("--grid", action="store_true", help="run the built-in verification grid")
    parser.add_argument("--workers", type=int, help="worker processes for --grid")
    return parser


def problem_from_args(args) -> Problem:
    data = {}
    if args.problem:
        data = _json_arg(args.problem, "problem")
        if not isinstance(data, dict):
            raise ProblemError("problem", "must be a JSON object")
        data = dict(data)
    if args.n is not None:
        data["n"] = args.n
    if args.weights is not None:
        try:
            data["weights"] = [int(w) for w in args.weights.split(",") if w.strip()]
        except ValueError as exc:
            raise ProblemError("weights", f"not a comma-separated integer list: {args.weights!r}") from exc
        data.setdefault("n", len(data["weights"]) - 1)
    if args.bundle is not None:
        data["bundle"] = _json_arg(args.bundle, "bundle")
    if args.sequence is not None:
        data["sequence"] = _json_arg(args.sequence, "sequence")
    if args.command:
        data["command"] = args.command
    for key in ("p_max", "q_max", "trunc", "order", "format"):
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    return parse_problem(data)


def _run_grid(args, out) -> int:
    from .grid import grid_actions, run_grid, summarize
    max_n = args.n if args.n is not None else 3
    results = run_grid(grid_actions(max_n), p_max=args.p_max or 8, q_max=args.q_max or 8,
                       trunc=args.trunc or 6, workers=args.workers)
    summary = summarize(results)
    failures = (summary["disagreements"] + summary["failed_certificates"]
                + summary["filtration_mismatches"] + summary["cech_mismatches"]
                + summary["euler_defects"])
    summary["status"] = "pass" if not failures else "fail"
    if (args.format or "json") == "json":
        out.write(json.dumps(summary, sort_keys=True) + "\n")
    else:
        for key, value in sorted(summary.items()):
            out.write(f"{key}: {value}\n")
    return EXIT_OK if not failures else EXIT_FAIL


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or "json"
    try:
        if args.grid:
            return _run_grid(args, out)
        problem = problem_from_args(args)
    except LefschetzError as exc:
        report = {"error": diagnostic(exc), "status": "invalid"}
        out.write(render(report, fmt) + "\n")
        return EXIT_INVALID
    report, code = run(problem)
    if code == EXIT_INVALID:
        report["status"] = "invalid"
    out.write(render(report, problem.format) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
