"""Continuous orthogonality of immanant functions.

Integrals over ``F~ = U_w wF`` are computed two ways:

* exactly, by Fourier counting.  F~ is a fundamental domain for translations
  by the root lattice, so ``exp(2 pi i <nu, x>)`` with ``nu`` in the weight
  lattice integrates to ``|F~| [nu = 0]``.  Expanding both factors then
  leaves an integer count of coinciding terms.
* numerically, by Monte Carlo sampling of F~.

All exact values are :class:`~fractions.Fraction` multiples of ``|F|``.
"""
from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, sqrt

import numpy as np

from .an_geometry import (
    WeightCoords,
    fundamental_domain,
    permute_coords,
    scaled_e,
    sample_F_tilde,
    stabilizer,
)
from .characters import character_table
from .immanant_fn import ImmanantSpec, immanant_sum_many, weyl_characters

MAX_EXACT_RANK = 4


@dataclass(frozen=True)
class InnerProductReport:
    n: int
    k: int
    l: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    exact_value: Fraction
    theorem_rhs: Fraction
    numeric_value: complex | None = None
    std_error: float | None = None
    samples: int = 0
    volume_F: float = 0.0

    @property
    def abs_error(self) -> float | None:
        if self.numeric_value is None:
            return None
        return abs(self.numeric_value - float(self.exact_value) * self.volume_F)

    @property
    def exact_matches_theorem(self) -> bool:
        return self.exact_value == self.theorem_rhs


def _check(n, lam, mu):
    if not 1 <= n <= MAX_EXACT_RANK:
        raise ValueError(f"rank {n} outside supported range 1..{MAX_EXACT_RANK}")
    for w in (lam, mu):
        if w.n != n or not w.is_lattice:
            raise ValueError(f"{w.omega} is not an integral weight of rank {n}")


def _as_weight(v) -> WeightCoords:
    return v if isinstance(v, WeightCoords) else WeightCoords(tuple(v))


@lru_cache(maxsize=None)
def _term_coefficients(n: int, k: int, omega: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Combined coefficients of the character sum, keyed by scaled e-coordinates of ``w lam``."""
    group, chi = weyl_characters(n, k)
    lam_e = scaled_e(omega)
    coeffs = defaultdict(int)
    for w, c in zip(group, chi):
        coeffs[permute_coords(w, lam_e)] += int(c)
    return dict(coeffs)


def exact_inner_product(n: int, k: int, l: int, lam, mu) -> Fraction:
    """``(1/|F|) int_{F~} Imm^k(lam, x) conj(Imm^l(mu, x)) dx`` exactly.

    Equals ``|W| * sum chi_k(w) chi_l(v)`` over pairs with ``w lam = v mu``.
    Works for any integral weights, dominant or not.
    """
    lam, mu = _as_weight(lam), _as_weight(mu)
    _check(n, lam, mu)
    a = _term_coefficients(n, k, tuple(int(c) for c in lam.omega))
    b = _term_coefficients(n, l, tuple(int(c) for c in mu.omega))
    total = sum(c * b.get(nu, 0) for nu, c in a.items())
    return Fraction(factorial(n + 1) * total)


@lru_cache(maxsize=None)
def _stabilizer(omega):
    return tuple(stabilizer(WeightCoords(omega)))


def theorem_rhs(n: int, k: int, l: int, lam, mu) -> Fraction:
    """``|W|^2 delta_{lam mu} delta_kl (1/d_k) sum_{w in stab(lam)} chi_k(w)`` in units of ``|F|``."""
    lam, mu = _as_weight(lam), _as_weight(mu)
    _check(n, lam, mu)
    if lam.is_zero or mu.is_zero or not lam.is_dominant or not mu.is_dominant:
        raise ValueError("the orthogonality theorem needs nonzero dominant weights")
    if k != l or lam != mu:
        return Fraction(0)
    table = character_table(n + 1)
    stab_sum = sum(table(k, w) for w in _stabilizer(lam.omega))
    return Fraction(factorial(n + 1) ** 2 * stab_sum, table.degree(k))


def _mc_chunk(n, k, l, lam, mu, count, rng):
    xs = sample_F_tilde(n, count, rng)
    f = immanant_sum_many(n, k, lam, xs) * np.conj(immanant_sum_many(n, l, mu, xs))
    return f.sum(), (f.real ** 2).sum(), (f.imag ** 2).sum()


def numeric_inner_product(n: int, k: int, l: int, lam, mu, samples: int = 100_000,
                          seed: int = 0, workers: int = 1) -> tuple[complex, float]:
    """Monte Carlo estimate of ``int_{F~} Imm^k(lam, x) conj(Imm^l(mu, x)) dx``.

    Samples are split into ``workers`` chunks, each drawing from its own
    stream spawned from ``seed``.  Returns the estimate and its standard
    error, ``|F~| sqrt((var Re f + var Im f) / samples)``.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    lam, mu = _as_weight(lam), _as_weight(mu)
    ImmanantSpec(n, k, lam), ImmanantSpec(n, l, mu)
    streams = [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(workers)]
    counts = [samples // workers + (i < samples % workers) for i in range(workers)]
    jobs = [(c, r) for c, r in zip(counts, streams) if c]
    if workers == 1:
        parts = [_mc_chunk(n, k, l, lam, mu, c, r) for c, r in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _mc_chunk(n, k, l, lam, mu, *job), jobs))
    s = sum(p[0] for p in parts)
    s_re2 = sum(p[1] for p in parts)
    s_im2 = sum(p[2] for p in parts)
    mean = s / samples
    var = max(s_re2 / samples - mean.real ** 2, 0.0) + max(s_im2 / samples - mean.imag ** 2, 0.0)
    volume = factorial(n + 1) * fundamental_domain(n).volume
    return complex(volume * mean), volume * sqrt(var / samples)


def inner_product_report(n: int, k: int, l: int, lam, mu, samples: int = 0,
                         seed: int = 0, workers: int = 1) -> InnerProductReport:
    lam, mu = _as_weight(lam), _as_weight(mu)
    numeric = se = None
    if samples:
        numeric, se = numeric_inner_product(n, k, l, lam, mu, samples, seed, workers)
    return InnerProductReport(
        n=n, k=k, l=l, lam=lam.omega, mu=mu.omega,
        exact_value=exact_inner_product(n, k, l, lam, mu),
        theorem_rhs=theorem_rhs(n, k, l, lam, mu),
        numeric_value=numeric, std_error=se, samples=samples,
        volume_F=fundamental_domain(n).volume,
    )


@dataclass(frozen=True)
class OrbitFunctionCheck:
    kind: str
    value: Fraction
    expected: Fraction

    @property
    def passed(self) -> bool:
        return self.value == self.expected


def cs_orthogonality_check(n: int, lam, mu) -> tuple[OrbitFunctionCheck, OrbitFunctionCheck | None]:
    """``int_F`` of C-function and S-function products, in units of ``|F|``.

    The integrands are W-invariant, so the F-integral is the F~-integral
    divided by ``|W|``.  The S-check is ``None`` unless both weights are
    strictly dominant.
    """
    lam, mu = _as_weight(lam), _as_weight(mu)
    order = factorial(n + 1)
    c_val = exact_inner_product(n, 1, 1, lam, mu) / order
    c_expected = Fraction(order * len(stabilizer(lam))) if lam == mu else Fraction(0)
    c_check = OrbitFunctionCheck("C", c_val, c_expected)
    if not (lam.is_strictly_dominant and mu.is_strictly_dominant):
        return c_check, None
    s_val = exact_inner_product(n, 2, 2, lam, mu) / order
    s_expected = Fraction(order) if lam == mu else Fraction(0)
    return c_check, OrbitFunctionCheck("S", s_val, s_expected)


def dominant_weights(n: int, max_coord: int, include_zero: bool = False) -> list[WeightCoords]:
    """All dominant weights with omega-coordinates in ``0..max_coord``."""
    out = []
    coords = [()]
    for _ in range(n):
        coords = [c + (v,) for c in coords for v in range(max_coord + 1)]
    for c in coords:
        if include_zero or any(c):
            out.append(WeightCoords(c))
    return out


def orthogonality_sweep(n: int, max_coord: int):
    """Yield ``(k, l, lam, mu, exact, rhs)`` for every nonzero dominant pair and character pair."""
    n_chi = character_table(n + 1).n_chars
    weights = dominant_weights(n, max_coord)
    for lam in weights:
        for mu in weights:
            for k in range(1, n_chi + 1):
                for l in range(1, n_chi + 1):
                    yield k, l, lam, mu, exact_inner_product(n, k, l, lam, mu), theorem_rhs(n, k, l, lam, mu)

