"""Verification suites driven by ``immanant verify``.

Each suite returns a list of :class:`Check` records; a suite passes when all
of its checks do.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import numpy as np

from . import characters as ch
from .an_geometry import WeightCoords, fundamental_domain
from .immanant_fn import (
    WEYL_WORD_FORMS,
    ExpTermSum,
    ImmanantSpec,
    determinant,
    evaluate,
    expand_weight,
    imm33_explicit,
    lemma_expand,
    lemma_lhs,
    matrix_A,
    matrix_immanant,
    permanent,
    product_expand,
    symmetry_residuals,
    weyl_orbit_weights,
    word_form_value,
)
from .orthogonality import (
    cs_orthogonality_check,
    dominant_weights,
    exact_inner_product,
    numeric_inner_product,
    orthogonality_sweep,
)
from .sym_core import class_representative, enumerate_group

SUITES = ("characters", "identities", "orthogonality-exact", "orthogonality-mc", "all")

# known character tables of S_2, S_3, S_4, columns indexed by cycle type
REFERENCE_TABLES = {
    2: {(1, 1): (1, 1), (2,): (1, -1)},
    3: {
        (1, 1, 1): (1, 1, 2),
        (2, 1): (1, -1, 0),
        (3,): (1, 1, -1),
    },
    4: {
        (1, 1, 1, 1): (1, 1, 2, 3, 3),
        (2, 1, 1): (1, -1, 0, 1, -1),
        (2, 2): (1, 1, 2, -1, -1),
        (3, 1): (1, 1, -1, 0, 0),
        (4,): (1, -1, 0, -1, 1),
    },
}


@dataclass
class Check:
    name: str
    paper_ref: str
    passed: bool
    expected: object = None
    actual: object = None
    tolerance: float | None = None
    message: str = field(default="")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


def rel_error(a: complex, b: complex) -> float:
    """``|a - b| / max(1, |b|)``; absolute near zero, relative for large values."""
    return abs(a - b) / max(1.0, abs(b))


def random_x(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    x = rng.uniform(-scale, scale, n + 1)
    return x - x.mean()


def random_dominant(rng: np.random.Generator, n: int, max_coord: int = 3, nonzero: bool = True) -> WeightCoords:
    while True:
        c = tuple(int(v) for v in rng.integers(0, max_coord + 1, n))
        if any(c) or not nonzero:
            return WeightCoords(c)


def _tol_check(name, ref, expected, actual, tol):
    err = rel_error(actual, expected)
    ok = err <= tol
    msg = "" if ok else f"{name}: relative error {err:.3e} exceeds {tol:g} ({ref})"
    return Check(name, ref, ok, expected, actual, tol, msg)


def _exact_check(name, ref, expected, actual):
    ok = expected == actual
    msg = "" if ok else f"{name}: expected {expected}, got {actual} ({ref})"
    return Check(name, ref, ok, expected, actual, 0.0, msg)


def characters_suite(n: int) -> list[Check]:
    """Character tables of S_m for m up to ``n + 1``."""
    checks = []
    top = n + 1
    for m in range(1, top + 1):
        t = ch.character_table(m)
        if m in REFERENCE_TABLES:
            ref = REFERENCE_TABLES[m]
            actual = {rho: tuple(t.value(k, rho) for k in range(1, t.n_chars + 1)) for rho in ref}
            checks.append(_exact_check(f"S_{m} table matches reference", "character tables of S_2, S_3, S_4", ref, actual))
        checks.append(_exact_check(f"S_{m} row orthogonality", "row orthogonality of characters",
                                   True, ch.row_orthogonality_check(t)))
        checks.append(_exact_check(f"S_{m} column orthogonality", "column orthogonality of characters",
                                   True, ch.column_orthogonality_check(t)))
        degrees = sum(t.degree(k) ** 2 for k in range(1, t.n_chars + 1))
        checks.append(_exact_check(f"S_{m} sum of squared degrees", "degrees of irreducible characters",
                                   factorial(m), degrees))
        if m <= 5:
            ok = all(
                ch.convolution_check(t, k, l, class_representative(rho))
                for k in range(1, t.n_chars + 1)
                for l in range(1, t.n_chars + 1)
                for rho in t.classes
            )
            checks.append(_exact_check(f"S_{m} character convolution", "convolution of characters", True, ok))
    return checks


def identities_suite(n: int, seed: int = 0, points: int = 10) -> list[Check]:
    """Pointwise identities of immanant functions at random points."""
    if not 1 <= n <= 4:
        raise ValueError("identities suite supports 1 <= n <= 4")
    rng = np.random.default_rng(seed)
    table = ch.character_table(n + 1)
    n_chi = table.n_chars
    group = enumerate_group(n + 1)
    checks = []

    # two evaluation routes
    worst = {k: 0.0 for k in range(1, n_chi + 1)}
    for _ in range(points):
        lam = random_dominant(rng, n, nonzero=False)
        x = random_x(rng, n)
        A = matrix_A(lam, x)
        for k in range(1, n_chi + 1):
            v = evaluate(ImmanantSpec(n, k, lam), x)
            worst[k] = max(worst[k], rel_error(matrix_immanant(A, table.row(k)), v))
            if k == 1:
                worst[k] = max(worst[k], rel_error(permanent(A), v))
            if k == 2:
                worst[k] = max(worst[k], rel_error(determinant(A), v))
    for k, err in worst.items():
        checks.append(_tol_check(f"character sum = matrix immanant (k={k})",
                                 "immanant of the exponential matrix", 0.0, err, 1e-9))

    # tabulated explicit expansions
    for k in range(1, n_chi + 1):
        if (n, k) not in WEYL_WORD_FORMS:
            continue
        err = 0.0
        for _ in range(points):
            lam = random_dominant(rng, n)
            x = random_x(rng, n)
            v = evaluate(ImmanantSpec(n, k, lam), x)
            err = max(err, rel_error(word_form_value(n, k, lam, x), v))
            if n == 2:
                err = max(err, rel_error(imm33_explicit(lam, x), v))
        checks.append(_tol_check(f"explicit Weyl-word form (n={n}, k={k})",
                                 "explicit forms of the new immanant functions", 0.0, err, 1e-10))

    # symmetries under the Weyl group, all elements
    n_x = 3 if n <= 3 else 1
    for k in range(1, n_chi + 1):
        lam = random_dominant(rng, n)
        spec = ImmanantSpec(n, k, lam)
        err = 0.0
        for _ in range(n_x):
            x = random_x(rng, n)
            scale = max(1.0, abs(evaluate(spec, x)))
            for w in group:
                err = max(err, max(symmetry_residuals(spec, w, x)) / scale)
        checks.append(_tol_check(f"Weyl symmetries (k={k})", "symmetries of immanant functions", 0.0, err, 1e-10))

    # conjugation: conj(Imm(lam, x)) = Imm(lam, -x)
    err = 0.0
    for k in range(1, n_chi + 1):
        for _ in range(points):
            spec = ImmanantSpec(n, k, random_dominant(rng, n))
            x = random_x(rng, n)
            err = max(err, rel_error(np.conj(evaluate(spec, x)), evaluate(spec, -x)))
    checks.append(_tol_check("conjugation symmetry", "characters are real", 0.0, err, 1e-10))

    # product expansion
    if n <= 3:
        pairs = [(k, l) for k in range(1, n_chi + 1) for l in range(1, n_chi + 1)]
    else:
        pairs = [(1, 1), (1, 3), (3, 4), (2, n_chi)]
    err = 0.0
    zero_check = True
    for k, l in pairs:
        s1 = ImmanantSpec(n, k, random_dominant(rng, n))
        s2 = ImmanantSpec(n, l, random_dominant(rng, n))
        prod = product_expand(s1, s2)
        for _ in range(max(2, points // len(pairs) + 1)):
            x = random_x(rng, n)
            err = max(err, rel_error(prod.evaluate(x), evaluate(s1, x) * evaluate(s2, x)))
        expected_total = factorial(n + 1) ** 2 if (k, l) == (1, 1) else 0
        zero_check &= prod.coefficient_total() == expected_total
    checks.append(_tol_check("product expansion vs pointwise product", "product of immanant functions", 0.0, err, 1e-9))
    checks.append(_exact_check("product expansion coefficient total", "row orthogonality of characters", True, zero_check))

    # l = 1 collapse: Imm^k(lam) Phi(mu) = sum_v Imm^k(lam + v mu)
    for k in range(1, n_chi + 1):
        lam, mu = random_dominant(rng, n), random_dominant(rng, n)
        collapsed = ExpTermSum(n)
        for _, vm in weyl_orbit_weights(n, mu):
            collapsed = collapsed + expand_weight(n, k, lam + vm)
        prod = product_expand(ImmanantSpec(n, k, lam), ImmanantSpec(n, 1, mu))
        checks.append(_exact_check(f"product with C-function collapses (k={k})", "product of immanant functions",
                                   True, prod.terms == collapsed.terms))

    # lemma, both variants, against the direct triple sum
    if n <= 3:
        for conj in (False, True):
            err = 0.0
            for _ in range(points):
                k, l = int(rng.integers(1, n_chi + 1)), int(rng.integers(1, n_chi + 1))
                lam, mu = random_dominant(rng, n), random_dominant(rng, n)
                rhs = lemma_expand(n, k, l, lam, mu, conjugate_second=conj)
                x = random_x(rng, n)
                err = max(err, rel_error(rhs.evaluate(x), lemma_lhs(n, k, l, lam, mu, x, conjugate_second=conj)))
            label = "conjugated" if conj else "plain"
            checks.append(_tol_check(f"lemma ({label}) vs direct sum", "lemma on Weyl-averaged products", 0.0, err, 1e-9))
    return checks


def orthogonality_exact_suite(n: int, max_coord: int = 2) -> list[Check]:
    checks = []
    total = mismatches = 0
    first_bad = None
    for k, l, lam, mu, exact, rhs in orthogonality_sweep(n, max_coord):
        total += 1
        if exact != rhs:
            mismatches += 1
            first_bad = first_bad or (k, l, lam.omega, mu.omega, exact, rhs)
    c = _exact_check(f"exact integral = theorem value ({total} tuples)", "continuous orthogonality theorem", 0, mismatches)
    if first_bad:
        c.message += f"; first mismatch k={first_bad[0]} l={first_bad[1]} lam={first_bad[2]} mu={first_bad[3]}"
    checks.append(c)

    order = factorial(n + 1)
    weights = dominant_weights(n, max_coord)
    bad = []
    for lam in weights:
        for mu in weights:
            c_chk, s_chk = cs_orthogonality_check(n, lam, mu)
            for chk in (c_chk, s_chk):
                if chk is not None and not chk.passed:
                    bad.append((chk.kind, lam.omega, mu.omega))
    checks.append(_exact_check("C- and S-function orthogonality on F", "orthogonality of C- and S-functions", [], bad))

    # zero weight: int_F Phi_lam = |F| |W| delta
    ok = True
    zero = WeightCoords((0,) * n)
    for lam in dominant_weights(n, max_coord, include_zero=True):
        # ∫_{F~} Phi_lam conj(Phi_0) = |W| * |W| * ∫_F Phi_lam
        f_integral = exact_inner_product(n, 1, 1, lam, zero) / (order * order)
        ok &= f_integral == (Fraction(order) if lam.is_zero else 0)
    checks.append(_exact_check("integral of C-function over F", "integral of a C-function", True, ok))
    return checks


def orthogonality_mc_suite(n: int, samples: int = 100_000, seed: int = 0, tuples: int = 10,
                           max_coord: int = 2, n_se: float = 4.0) -> list[Check]:
    """Monte Carlo integrals against the exact values."""
    rng = np.random.default_rng(seed)
    n_chi = ch.character_table(n + 1).n_chars
    vol = fundamental_domain(n).volume
    checks = []
    for i in range(tuples):
        if i % 2 == 0:
            k = l = int(rng.integers(1, n_chi + 1))
            lam = mu = random_dominant(rng, n, max_coord)
        else:
            k, l = int(rng.integers(1, n_chi + 1)), int(rng.integers(1, n_chi + 1))
            lam, mu = random_dominant(rng, n, max_coord), random_dominant(rng, n, max_coord)
        exact = exact_inner_product(n, k, l, lam, mu)
        est, se = numeric_inner_product(n, k, l, lam, mu, samples, seed=seed + 1000 + i)
        target = float(exact) * vol
        ok = abs(est - target) <= n_se * se
        msg = "" if ok else (f"Monte Carlo k={k} l={l} lam={lam.omega} mu={mu.omega}: {est:.6g} "
                             f"vs {target:.6g}, {abs(est - target) / se:.2f} standard errors "
                             "(continuous orthogonality theorem)")
        checks.append(Check(f"Monte Carlo k={k} l={l} lam={lam.omega} mu={mu.omega}",
                            "continuous orthogonality theorem", ok, target, est, n_se * se, msg))
    return checks


def run_suite(suite: str, n: int, max_coord: int = 2, samples: int = 100_000, seed: int = 0) -> list[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if suite == "characters":
        return characters_suite(n)
    if suite == "identities":
        return identities_suite(n, seed)
    if suite == "orthogonality-exact":
        return orthogonality_exact_suite(n, max_coord)
    if suite == "orthogonality-mc":
        return orthogonality_mc_suite(n, samples, seed, max_coord=max_coord)
    out = []
    for s in SUITES[:-1]:
        if s == "identities" and n > 4:
            continue
        out.extend(run_suite(s, n, max_coord, samples, seed))
    return out
