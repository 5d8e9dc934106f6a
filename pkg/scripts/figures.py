"""Contour data for Imm^{3,3} on the plane of A_2, for lambda = (1,0) and (1,2).

Writes CSV + JSON sidecars through the CLI and, if matplotlib is installed,
a PNG with real part, imaginary part and modulus per weight.

    python scripts/figures.py --out figures/ [--resolution 201] [--no-plot]
"""
import argparse
import csv
from pathlib import Path

import numpy as np

from immanant.cli import main as cli_main
from immanant.an_geometry import fundamental_domain, plane_basis

WEIGHTS = ("1,0", "1,2")


def load(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))[1:]
    data = np.array(rows, dtype=float)
    res = int(round(np.sqrt(len(data))))
    return (data[:, i].reshape(res, res) for i in range(4))


def plot(paths, out):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    basis = plane_basis(2)
    tri = np.array([basis @ np.array(v.e) for v in fundamental_domain(2).vertices] + [[0.0, 0.0]])
    fig, axes = plt.subplots(len(paths), 3, figsize=(11, 3.6 * len(paths)), squeeze=False)
    for row, (lam, path) in zip(axes, paths.items()):
        x1, x2, re, im = load(path)
        for ax, z, title in zip(row, (re, im, np.hypot(re, im)), ("Re", "Im", "|.|")):
            cs = ax.contourf(x1, x2, z, levels=30, cmap="RdBu_r" if title != "|.|" else "viridis")
            ax.plot(tri[:, 0], tri[:, 1], "k-", lw=1)
            ax.set_title(f"{title} Imm^(3,3), lambda=({lam})")
            ax.set_aspect("equal")
            fig.colorbar(cs, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    print(f"wrote {out}")


def run(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--resolution", type=int, default=101)
    ap.add_argument("--no-plot", action="store_true")
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    paths = {}
    for lam in WEIGHTS:
        path = out / f"imm33_{lam.replace(',', '')}.csv"
        code = cli_main(["grid", "--n", "2", "--k", "3", "--lambda", lam,
                         "--resolution", str(args.resolution), "--out", str(path)])
        if code:
            return code
        paths[lam] = path
        print(f"wrote {path}")
    if not args.no_plot:
        try:
            plot(paths, out / "imm33.png")
        except ImportError:
            print("matplotlib not installed; skipping the PNG")
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
