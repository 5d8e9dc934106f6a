"""Monte Carlo error vs sample count for a few inner products on A_2.

For each tuple prints N, estimate, |error| against the exact value and the
reported standard error.  The ratio should hover around 1 and the error
should shrink like N^-1/2.

    python scripts/mc_convergence.py [--max-exp 6] [--workers 4]
"""
import argparse

from immanant.an_geometry import WeightCoords, fundamental_domain
from immanant.orthogonality import exact_inner_product, numeric_inner_product

TUPLES = [
    (3, 3, (1, 1), (1, 1)),
    (3, 3, (1, 0), (1, 0)),
    (1, 1, (2, 1), (2, 1)),
    (1, 3, (1, 1), (1, 1)),
    (3, 3, (1, 2), (2, 1)),
]


def run(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-exp", type=int, default=6)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    vol = fundamental_domain(2).volume
    print(f"{'k':>2} {'l':>2} {'lambda':>7} {'mu':>7} {'N':>9} {'estimate':>24} {'|err|':>10} {'SE':>10} {'ratio':>6}")
    for k, l, lam, mu in TUPLES:
        exact = float(exact_inner_product(2, k, l, WeightCoords(lam), WeightCoords(mu))) * vol
        for e in range(3, args.max_exp + 1):
            est, se = numeric_inner_product(2, k, l, WeightCoords(lam), WeightCoords(mu),
                                            samples=10 ** e, seed=args.seed, workers=args.workers)
            err = abs(est - exact)
            ratio = err / se if se else float("nan")
            print(f"{k:>2} {l:>2} {str(lam):>7} {str(mu):>7} {10 ** e:>9} "
                  f"{est.real:>11.5f}{est.imag:+11.5f}i {err:>10.2e} {se:>10.2e} {ratio:>6.2f}")
        print(f"{'':>30} exact {exact:.6f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
