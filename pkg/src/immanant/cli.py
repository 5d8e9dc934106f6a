"""Command-line interface: ``immanant chartable|eval|grid|verify|orbit``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

import numpy as np

from .an_geometry import WeightCoords, fundamental_domain, orbit, plane_basis, stabilizer, to_e
from .characters import MAX_TABLE_DEGREE, character_table
from .immanant_fn import ImmanantSpec, evaluate, evaluate_many, matrix_A, matrix_immanant
from .sym_core import class_representative
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def to_jsonable(v):
    """Exact numbers become strings so that they survive a JSON round trip."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer, Fraction)):
        return str(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    if isinstance(v, (complex, np.complexfloating)):
        return {"re": float(v.real), "im": float(v.imag)}
    if isinstance(v, dict):
        return {",".join(map(str, k)) if isinstance(k, tuple) else str(k): to_jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_jsonable(x) for x in v]
    return str(v)


# chartable ---------------------------------------------------------------

def cmd_chartable(args) -> int:
    m = args.m
    if not 2 <= m <= MAX_TABLE_DEGREE:
        raise UsageError(f"m must be in 2..{MAX_TABLE_DEGREE}, got {m}")
    t = character_table(m)
    labels = [class_representative(c).cycle_notation() for c in t.classes]
    if args.format == "json":
        doc = {
            "m": str(m),
            "classes": [list(map(str, c)) for c in t.classes],
            "class_labels": labels,
            "class_sizes": [str(s) for s in t.class_sizes],
            "shapes": [list(map(str, s)) for s in t.shapes],
            "rows": [[str(v) for v in row] for row in t.rows],
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    width = max(6, max(len(s) for s in labels) + 1)
    print("[rho]".ljust(8) + "".join(s.rjust(width) for s in labels))
    print("size".ljust(8) + "".join(str(s).rjust(width) for s in t.class_sizes))
    for k, row in enumerate(t.rows, start=1):
        print(f"chi_{k}".ljust(8) + "".join(str(v).rjust(width) for v in row))
    return EXIT_OK


# eval --------------------------------------------------------------------

def _spec(args) -> ImmanantSpec:
    lam = args.lam if args.lam is not None else (0,) * args.n
    try:
        return ImmanantSpec(args.n, args.k, WeightCoords(lam))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(args) -> int:
    spec = _spec(args)
    x_omega = args.x if args.x is not None else (0.0,) * args.n
    if len(x_omega) != args.n:
        raise UsageError(f"--x needs {args.n} omega-coordinates")
    x = to_e(WeightCoords(tuple(float(v) for v in x_omega)))
    by_sum = evaluate(spec, x)
    by_matrix = matrix_immanant(matrix_A(spec.lam, x), character_table(args.n + 1).row(args.k))
    diff = abs(by_sum - by_matrix)
    if args.format == "json":
        print(json.dumps(to_jsonable({
            "n": args.n, "k": args.k, "lambda": list(spec.lam.omega), "x": [float(v) for v in x_omega],
            "character_sum": by_sum, "matrix_immanant": by_matrix, "difference": diff,
        })))
    else:
        print(f"character sum   : {by_sum.real:.17g} {by_sum.imag:+.17g}i")
        print(f"matrix immanant : {by_matrix.real:.17g} {by_matrix.imag:+.17g}i")
        print(f"difference      : {diff:.3e}")
    return EXIT_OK


# grid --------------------------------------------------------------------

DEFAULT_RANGE = (-1.0, 1.0, -1.0, 1.0)
DEFAULT_RESOLUTION = 101


def grid_axes(x_range, y_range, resolution):
    return np.linspace(*x_range, resolution), np.linspace(*y_range, resolution)


def evaluate_grid(spec: ImmanantSpec, x_range, y_range, resolution: int, workers: int = 1):
    """Values on a ``resolution x resolution`` grid of the H-plane (n = 2).

    Returns ``(points, values)`` in row-major order, ``x1`` varying fastest.
    """
    if spec.n != 2:
        raise UsageError("grid export is restricted to n = 2")
    if resolution < 2:
        raise UsageError("resolution must be at least 2")
    xs, ys = grid_axes(x_range, y_range, resolution)
    basis = plane_basis(2)
    rows = [np.column_stack([xs, np.full(resolution, y)]) for y in ys]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            vals = list(pool.map(lambda r: evaluate_many(spec, r @ basis), rows))
    else:
        vals = [evaluate_many(spec, r @ basis) for r in rows]
    return np.vstack(rows), np.concatenate(vals)


def grid_csv(points: np.ndarray, values: np.ndarray) -> str:
    lines = ["x1,x2,re,im"]
    for (a, b), v in zip(points, values):
        lines.append(f"{a:.17g},{b:.17g},{v.real:.17g},{v.imag:.17g}")
    return "\n".join(lines) + "\n"


def grid_sidecar(spec: ImmanantSpec, x_range, y_range, resolution: int) -> dict:
    basis = plane_basis(2)
    dom = fundamental_domain(2)
    return {
        "n": spec.n,
        "k": spec.k,
        "lambda": list(spec.lam.omega),
        "x_range": list(x_range),
        "y_range": list(y_range),
        "resolution": resolution,
        "order": "row-major, x1 fastest",
        "basis": basis.tolist(),
        "F_vertices_plane": [(basis @ np.array(v.e)).tolist() for v in dom.vertices],
        "F_vertices_e": [list(v.e) for v in dom.vertices],
    }


def cmd_grid(args) -> int:
    spec = _spec(args)
    rng = args.range or DEFAULT_RANGE
    if len(rng) == 2:
        rng = rng + rng
    if len(rng) != 4 or rng[0] >= rng[1] or rng[2] >= rng[3]:
        raise UsageError("--range takes xmin,xmax[,ymin,ymax] with min < max")
    x_range, y_range = rng[:2], rng[2:]
    points, values = evaluate_grid(spec, x_range, y_range, args.resolution, args.workers)
    text = grid_csv(points, values)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    out = Path(args.out)
    try:
        out.write_text(text, newline="\n")
        out.with_suffix(".json").write_text(
            json.dumps(grid_sidecar(spec, x_range, y_range, args.resolution), indent=2) + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None
    return EXIT_OK


# verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        checks = run_suite(args.suite, args.n, args.max_coord, args.samples, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    passed = all(c.passed for c in checks)
    if args.format == "json":
        doc = {
            "suite": args.suite,
            "n": args.n,
            "checks": [
                {
                    "name": c.name,
                    "paper_ref": c.paper_ref,
                    "status": c.status,
                    "expected": to_jsonable(c.expected),
                    "actual": to_jsonable(c.actual),
                    "tolerance": c.tolerance,
                }
                for c in checks
            ],
            "passed": passed,
        }
        print(json.dumps(doc, indent=2))
    else:
        for c in checks:
            print(f"[{c.status.upper()}] {c.name}" + (f" -- {c.message}" if c.message else ""))
        print(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return EXIT_OK if passed else EXIT_FAIL


# orbit -------------------------------------------------------------------

def cmd_orbit(args) -> int:
    if args.lam is None or len(args.lam) != args.n:
        raise UsageError(f"--lambda needs {args.n} integer omega-coordinates")
    lam = WeightCoords(args.lam)
    pts = orbit(lam)
    stab = stabilizer(lam)
    if args.format == "json":
        print(json.dumps({
            "lambda": [str(v) for v in lam.omega],
            "orbit": [{"w": list(w.images), "omega": [str(v) for v in p.omega]} for w, p in pts],
            "stabilizer": [list(w.images) for w in stab],
        }, indent=2))
    else:
        for w, p in pts:
            print(f"{w.cycle_notation():>12}  {p.omega}")
        print(f"|orbit| = {len(pts)}, |stabilizer| = {len(stab)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="immanant", description="Immanant functions of the Weyl groups of A_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", help="print the character table of S_m")
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_chartable)

    def common(p, need_k=True):
        p.add_argument("--n", type=int, required=True, help="rank")
        if need_k:
            p.add_argument("--k", type=int, required=True, help="character index")
        p.add_argument("--lambda", dest="lam", type=_ints, help="dominant weight, omega-coordinates")

    p = sub.add_parser("eval", help="evaluate Imm^{n+1,k}(lambda, x) by both routes")
    common(p)
    p.add_argument("--x", type=_floats, help="point, omega-coordinates")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("grid", help="contour data on the plane of A_2")
    common(p)
    p.add_argument("--range", type=_floats, help="xmin,xmax[,ymin,ymax] in plane coordinates")
    p.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--out", help="CSV path; a .json sidecar is written next to it")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--max-coord", type=int, default=2)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="Weyl orbit and stabilizer of a weight")
    common(p, need_k=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_orbit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"immanant: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
