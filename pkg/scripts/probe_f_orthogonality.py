"""Are immanant functions with k >= 3 orthogonal on F alone?

On F~ the answer is exact (Fourier counting).  On the single simplex F the
integrand is not W-invariant for k >= 3, so nothing forces the integral to
vanish.  This estimates ``int_F Imm^k(lam) conj Imm^l(mu)`` by Monte Carlo for
all distinct pairs on A_2 and flags those more than ``--z`` standard errors
from zero.

    python scripts/probe_f_orthogonality.py [--max-coord 2] [--samples 200000]
"""
import argparse
import itertools

import numpy as np

from immanant.an_geometry import fundamental_domain, sample_F
from immanant.characters import character_table
from immanant.immanant_fn import ImmanantSpec, evaluate_many
from immanant.orthogonality import dominant_weights


def run(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--max-coord", type=int, default=2)
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--z", type=float, default=5.0)
    args = ap.parse_args(argv)
    n = args.n
    vol = fundamental_domain(n).volume
    xs = sample_F(n, args.samples, args.seed)
    n_chi = character_table(n + 1).n_chars
    weights = dominant_weights(n, args.max_coord)
    values = {(k, lam): evaluate_many(ImmanantSpec(n, k, lam), xs)
              for k in range(1, n_chi + 1) for lam in weights}
    flagged = total = 0
    for (k, lam), (l, mu) in itertools.combinations(values, 2):
        f = values[k, lam] * np.conj(values[l, mu])
        est = vol * f.mean()
        se = vol * np.sqrt((f.real.var() + f.imag.var()) / len(f))
        total += 1
        if se and abs(est) > args.z * se:
            flagged += 1
            print(f"k={k} l={l} lambda={lam.omega} mu={mu.omega}: {est.real:+.5f}{est.imag:+.5f}i "
                  f"(SE {se:.1e}, {abs(est) / se:.0f} SE)")
    print(f"{flagged}/{total} distinct pairs are clearly nonzero on F")
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
