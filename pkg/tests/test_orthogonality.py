from fractions import Fraction
from math import factorial, sqrt

import numpy as np
import pytest

from immanant.an_geometry import WeightCoords, fundamental_domain
from immanant.characters import character_table
from immanant.immanant_fn import ImmanantSpec, evaluate_many
from immanant.orthogonality import (
    cs_orthogonality_check,
    dominant_weights,
    exact_inner_product,
    inner_product_report,
    numeric_inner_product,
    orthogonality_sweep,
    theorem_rhs,
)
from immanant.sym_core import enumerate_group

W = WeightCoords


def _pair_count_oracle(n, k, l, lam, mu):
    """|W| * sum over pairs (w, v) with w lam == v mu, by brute force on exact coordinates."""
    t = character_table(n + 1)
    group = enumerate_group(n + 1)
    from immanant.an_geometry import weyl_apply_weight
    total = 0
    for w in group:
        wl = weyl_apply_weight(w, lam)
        for v in group:
            if wl == weyl_apply_weight(v, mu):
                total += t(k, w) * t(l, v)
    return factorial(n + 1) * total


def test_exact_examples():
    assert exact_inner_product(2, 3, 3, W((1, 1)), W((1, 1))) == 36
    assert exact_inner_product(2, 1, 1, W((1, 0)), W((1, 0))) == 72
    for lam in dominant_weights(2, 2):
        for mu in dominant_weights(2, 2):
            assert exact_inner_product(2, 3, 1, lam, mu) == 0


def test_exact_against_pair_count(rng):
    for n in (1, 2, 3):
        n_chi = character_table(n + 1).n_chars
        for _ in range(10):
            k, l = int(rng.integers(1, n_chi + 1)), int(rng.integers(1, n_chi + 1))
            lam = W(tuple(int(v) for v in rng.integers(0, 3, n)))
            mu = lam if rng.random() < 0.5 else W(tuple(int(v) for v in rng.integers(0, 3, n)))
            assert exact_inner_product(n, k, l, lam, mu) == _pair_count_oracle(n, k, l, lam, mu)


def test_theorem_rhs_examples():
    assert theorem_rhs(2, 3, 3, W((1, 0)), W((1, 0))) == 36
    assert theorem_rhs(3, 4, 4, W((1, 1, 1)), W((1, 1, 1))) == 576
    assert theorem_rhs(2, 3, 3, W((1, 0)), W((0, 1))) == 0
    assert theorem_rhs(2, 1, 1, W((1, 0)), W((1, 0))) == 72
    with pytest.raises(ValueError):
        theorem_rhs(2, 1, 1, W((0, 0)), W((1, 0)))


def test_theorem_rhs_is_fraction_when_needed():
    # chi_4 of S_4 on the stabilizer {id, (12)} of (0, 1, 1): (3 + 1) / 3
    val = theorem_rhs(3, 4, 4, W((0, 1, 1)), W((0, 1, 1)))
    assert val == Fraction(576 * 4, 3)
    assert val == exact_inner_product(3, 4, 4, W((0, 1, 1)), W((0, 1, 1)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sweep_exact_equals_theorem(n):
    count = 0
    for k, l, lam, mu, exact, rhs in orthogonality_sweep(n, 2):
        assert exact == rhs, (k, l, lam, mu)
        count += 1
    n_w = 3 ** n - 1
    assert count == n_w ** 2 * character_table(n + 1).n_chars ** 2


def test_strictly_dominant_corollary():
    for n in (1, 2, 3):
        n_chi = character_table(n + 1).n_chars
        lam = W((1,) * n)
        for k in range(1, n_chi + 1):
            assert theorem_rhs(n, k, k, lam, lam) == factorial(n + 1) ** 2


def test_a2_theorem_unconditional():
    for lam in dominant_weights(2, 3):
        for mu in dominant_weights(2, 3):
            assert exact_inner_product(2, 3, 3, lam, mu) == (36 if lam == mu else 0)


def test_integral_of_c_function():
    zero = W((0, 0))
    for lam in dominant_weights(2, 3, include_zero=True):
        assert exact_inner_product(2, 1, 1, lam, zero) == (216 if lam.is_zero else 0)


def test_cs_checks():
    c, s = cs_orthogonality_check(2, W((1, 1)), W((1, 1)))
    assert c.value == 6 and s.value == 6 and c.passed and s.passed
    c, s = cs_orthogonality_check(2, W((1, 0)), W((1, 0)))
    assert c.value == 12 and c.passed and s is None
    for lam in dominant_weights(3, 2):
        for mu in dominant_weights(3, 2):
            c, s = cs_orthogonality_check(3, lam, mu)
            assert c.passed and (s is None or s.passed)


def test_exact_by_fine_quadrature_rank1():
    # on A_1, F~ is the segment [-omega_1, omega_1]; integrate with a dense midpoint rule
    omega1 = np.array([0.5, -0.5])
    t = (np.arange(200_000) + 0.5) / 200_000 * 2 - 1
    xs = t[:, None] * omega1[None, :]
    length = 2 * np.linalg.norm(omega1)
    vol = fundamental_domain(1).volume
    for k, l, a, b in [(1, 1, 1, 1), (1, 1, 2, 1), (2, 2, 3, 3), (1, 2, 2, 2)]:
        f = evaluate_many(ImmanantSpec(1, k, W((a,))), xs) * np.conj(evaluate_many(ImmanantSpec(1, l, W((b,))), xs))
        approx = length * f.mean()
        assert approx == pytest.approx(float(exact_inner_product(1, k, l, W((a,)), W((b,)))) * vol, abs=1e-8)


def test_numeric_example():
    est, se = numeric_inner_product(2, 3, 3, W((1, 1)), W((1, 1)), samples=1_000_000, seed=1)
    target = 36 * sqrt(3) / 6
    assert target == pytest.approx(10.392304845413264)
    assert abs(est - target) <= 3 * se


def test_numeric_orthogonal_cases():
    est, se = numeric_inner_product(2, 1, 2, W((1, 1)), W((1, 1)), samples=100_000, seed=2)
    assert abs(est) <= 3 * se
    est, se = numeric_inner_product(2, 1, 1, W((1, 0)), W((2, 0)), samples=100_000, seed=3)
    assert abs(est) <= 3 * se


def test_numeric_reproducible_and_worker_streams():
    a = numeric_inner_product(2, 3, 3, W((1, 2)), W((1, 2)), samples=20_000, seed=9, workers=3)
    b = numeric_inner_product(2, 3, 3, W((1, 2)), W((1, 2)), samples=20_000, seed=9, workers=3)
    assert a == b
    c, se = numeric_inner_product(2, 3, 3, W((1, 2)), W((1, 2)), samples=20_000, seed=9, workers=1)
    assert abs(a[0] - c) <= 5 * (se + a[1])


def test_report():
    r = inner_product_report(2, 3, 3, W((1, 0)), W((1, 0)), samples=20_000, seed=4)
    assert r.exact_matches_theorem and r.exact_value == 36
    assert r.abs_error <= 4 * r.std_error
