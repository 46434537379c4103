"""Command-line front-end.

Usage examples::

    quasiarr quasi arrangement.json
    quasiarr count arrangement.json --q 6 --oracle
    quasiarr compare arrangement.json main3 3 6
    quasiarr graph triangle.json chromatic --json

Exit codes: 0 success, 1 oracle mismatch, 2 bad input or arguments,
3 subset cap exceeded, 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, arrangement, graphs, oracle
from .arrangement import TruncatedArrangement
from .errors import BudgetExceededError, QuasiArrError, SizeLimitError

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_SIZE = 3
EXIT_BUDGET = 4


class UsageError(Exception):
    pass


def _int_list(obj, name):
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise UsageError(f'"{name}" must be a list of integers')
    return obj


def _matrix(obj, name):
    if not isinstance(obj, list):
        raise UsageError(f'"{name}" must be a list of integer rows')
    return [_int_list(row, name) for row in obj]


def _load_json(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise UsageError(f"{path}: expected a JSON object")
    return data


def load_arrangement(path) -> TruncatedArrangement:
    """Read ``{"A": [[..]], "a": [..], "B": [[..]], "b": [..]}``; B and b are optional.

    An optional ``"n"`` gives the dimension when A and B have no rows.
    """
    data = _load_json(path)
    if "A" not in data or "a" not in data:
        raise UsageError(f'{path}: "A" and "a" are required')
    A = _matrix(data["A"], "A")
    a = _int_list(data["a"], "a")
    B = _matrix(data.get("B", []), "B")
    b = _int_list(data.get("b", []), "b")
    n = data.get("n")
    try:
        return TruncatedArrangement.build(A, a, B, b, n=n)
    except QuasiArrError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def load_graph(path):
    data = _load_json(path)
    if not isinstance(data.get("n"), int) or "edges" not in data:
        raise UsageError(f'{path}: "n" (integer) and "edges" are required')
    edges = _matrix(data["edges"], "edges")
    if any(len(e) != 2 for e in edges):
        raise UsageError(f'{path}: every edge must be a [tail, head] pair')
    try:
        G = graphs.DirectedMultigraph(data["n"], tuple(map(tuple, edges)))
    except QuasiArrError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    w = _int_list(data["w"], "w") if "w" in data else None
    b = _int_list(data["b"], "b") if "b" in data else None
    if w is not None and len(w) != G.m:
        raise UsageError(f'{path}: "w" has length {len(w)}, graph has {G.m} edges')
    if b is not None and len(b) != G.n:
        raise UsageError(f'{path}: "b" has length {len(b)}, graph has {G.n} vertices')
    return G, w, b


def _positive(value, name):
    if value < 1:
        raise UsageError(f"{name} must be a positive integer, got {value}")


def cmd_quasi(args):
    arr = load_arrangement(args.file)
    qp = arrangement.characteristic_quasi_polynomial(arr, args.max_m)
    parts = [f"period {qp.period}", f"q0 {qp.threshold}"]
    parts += [f"g={g}: {poly}" for g, poly in sorted(qp.constituents.items())]
    lines = ["; ".join(parts)]
    if qp.real_solution_empty:
        lines.append("# Bx = b has no real solution; the characteristic polynomial is 0")
    return qp.to_dict(), "\n".join(lines), 0


def cmd_count(args):
    _positive(args.q, "--q")
    arr = load_arrangement(args.file)
    value = arrangement.count_complement(arr, args.q, args.max_m)
    report = {"q": args.q, "count": value}
    text = str(value)
    code = 0
    if args.oracle:
        brute = oracle.brute_count_complement(arr, args.q, args.oracle_budget)
        match = brute == value
        report.update(oracle=brute, match=match)
        text += f", oracle {brute}, {'match' if match else 'MISMATCH'}"
        code = 0 if match else EXIT_MISMATCH
    return report, text, code


def _vector(cv):
    return {"lower": cv.lower, "upper": cv.upper, "values": list(cv.values)}


def cmd_compare(args):
    arr = load_arrangement(args.file)
    x, y = args.x, args.y
    _positive(x, args.theorem)
    _positive(y, args.theorem)
    arrangement.subset_profiles(arr, args.max_m)
    if args.theorem == "main3":
        q0 = arrangement.q_zero(arr)
        if x <= q0 or y <= q0:
            raise UsageError(f"main3 needs both moduli above q0={q0}")
        verdict = analysis.check_main3(arr, x, y)
        label = "beta"
    elif args.theorem == "main4":
        rho = arrangement.lcm_period(arr)
        if not (x <= rho and y <= rho):
            raise UsageError(f"main4 needs both residues in 1..{rho}")
        verdict = analysis.check_main4(arr, x, y)
        label = "gamma"
    else:
        verdict = analysis.check_main5(arr, x, y)
        label = None

    report = {
        "theorem": args.theorem,
        "args": [x, y],
        "hypotheses_hold": verdict.hypotheses_hold,
        "conclusion_holds": verdict.conclusion_holds,
        "witness": verdict.witness,
    }
    parts = [
        f"{args.theorem} {x} {y}",
        f"hypotheses {str(verdict.hypotheses_hold).lower()}",
        f"conclusion {str(verdict.conclusion_holds).lower()}",
    ]
    if verdict.witness is not None:
        parts.append(f"witness j={verdict.witness}")
    if label:
        report[label] = {str(x): _vector(verdict.left), str(y): _vector(verdict.right)}
        parts.append(f"{label}({x}) = {list(verdict.left.values)}")
        parts.append(f"{label}({y}) = {list(verdict.right.values)}")
    else:
        report["counts"] = {str(y): verdict.left, str(x * y): verdict.right}
        parts.append(f"#M({y}) = {verdict.left}")
        parts.append(f"#M({x * y}) = {verdict.right}")
    return report, "; ".join(parts), 0


def cmd_graph(args):
    G, w, b = load_graph(args.file)
    action = args.action
    if action in ("color", "chromatic") and w is None:
        raise UsageError(f'"{action}" needs edge weights "w" in the graph file')
    if action in ("flow", "flowpoly") and b is None:
        raise UsageError(f'"{action}" needs vertex supplies "b" in the graph file')
    if action in ("color", "flow"):
        _positive(args.q, "--q")
        if action == "color":
            value = graphs.count_colorings(G, w, args.q, args.max_m)
        else:
            value = graphs.count_flows(G, b, args.q, args.max_m)
        return {"action": action, "q": args.q, "count": value}, str(value), 0
    if action == "chromatic":
        qp, poly, threshold = graphs.modular_chromatic_polynomial(G, w, args.max_m)
        key = "q_w"
    else:
        qp, poly, threshold = graphs.flow_polynomial(G, b, args.max_m)
        key = "q_b"
    report = {
        "action": action,
        "polynomial": poly.descending(),
        key: threshold,
        "quasi": qp.to_dict(),
    }
    return report, f"{poly}, {key} {threshold}", 0


def _env_int(name):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--max-m", type=int, help="cap on the number of hyperplanes (default 24)")
    common.add_argument("--oracle-budget", type=int, help="max points the brute-force oracle may enumerate")

    parser = argparse.ArgumentParser(
        prog="quasiarr",
        description="Characteristic quasi-polynomials of truncated integral arrangements.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quasi", parents=[common], help="period, threshold and constituents")
    p.add_argument("file")
    p.set_defaults(func=cmd_quasi)

    p = sub.add_parser("count", parents=[common], help="exact complement count mod q")
    p.add_argument("file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check by enumeration")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("compare", parents=[common], help="run a comparison-theorem checker")
    p.add_argument("file")
    p.add_argument("theorem", choices=["main3", "main4", "main5"])
    p.add_argument("x", type=int, help="a (main3/main4) or p (main5)")
    p.add_argument("y", type=int, help="b (main3/main4) or q (main5)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("graph", parents=[common], help="group colorings and flows")
    p.add_argument("file")
    gsub = p.add_subparsers(dest="action", required=True)
    for name in ("color", "flow"):
        gp = gsub.add_parser(name, parents=[common])
        gp.add_argument("--q", type=int, required=True)
    for name in ("chromatic", "flowpoly"):
        gsub.add_parser(name, parents=[common])
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.json = getattr(args, "json", False)
        args.max_m = getattr(args, "max_m", None)
        if args.max_m is None:
            args.max_m = _env_int("MAX_M")
        args.oracle_budget = getattr(args, "oracle_budget", None)
        if args.oracle_budget is None:
            args.oracle_budget = _env_int("ORACLE_BUDGET")
        report, text, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except QuasiArrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
