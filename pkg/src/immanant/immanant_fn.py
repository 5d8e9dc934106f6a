"""Immanant functions of the Weyl group W(A_n).

``Imm^{n+1,k}(lam, x) = sum_{w in W} chi_k(w) exp(2 pi i <w lam, x>)``

Two independent evaluation routes are provided: the Weyl-group character sum
(:func:`evaluate`) and the immanant of the exponential matrix
``A[j][k] = exp(2 pi i l_j x_k)`` (:func:`matrix_immanant` of :func:`matrix_A`).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial

import numpy as np

from .an_geometry import (
    Point,
    WeightCoords,
    e_to_omega_exact,
    permute_coords,
    perm_matrix_indices,
    to_e,
    apply_word,
)
from .characters import character_table
from .sym_core import compose, cycle_type, enumerate_group, inverse, partitions

TWO_PI_I = 2j * np.pi
MAX_PRODUCT_RANK = 4


@dataclass(frozen=True)
class ImmanantSpec:
    """Identifies ``Imm^{n+1,k}(lam, .)`` for a dominant integral weight ``lam``."""

    n: int
    k: int
    lam: WeightCoords

    def __post_init__(self):
        lam = self.lam if isinstance(self.lam, WeightCoords) else WeightCoords(tuple(self.lam))
        object.__setattr__(self, "lam", lam)
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if lam.n != self.n:
            raise ValueError(f"weight {lam.omega} does not have rank {self.n}")
        n_chi = len(partitions(self.n + 1))
        if not 1 <= self.k <= n_chi:
            raise ValueError(f"character index {self.k} outside 1..{n_chi}")
        if not lam.is_lattice or not lam.is_dominant:
            raise ValueError(f"weight {lam.omega} is not dominant integral")


@lru_cache(maxsize=None)
def weyl_characters(n: int, k: int) -> tuple[tuple, np.ndarray]:
    """Elements of W(A_n) in enumeration order and ``chi_k`` on each of them."""
    group = enumerate_group(n + 1)
    table = character_table(n + 1)
    chi = np.array([table(k, w) for w in group], dtype=np.int64)
    return group, chi


def _as_e(v) -> np.ndarray:
    if isinstance(v, WeightCoords):
        v = to_e(v)
    if isinstance(v, Point):
        return np.array(v.e)
    return np.asarray(v, dtype=float)


def immanant_sum(n: int, k: int, weight, x) -> complex:
    """Character sum for an arbitrary weight (not necessarily dominant or integral)."""
    return complex(immanant_sum_many(n, k, weight, np.atleast_2d(_as_e(x)))[0])


def immanant_sum_many(n: int, k: int, weight, xs: np.ndarray) -> np.ndarray:
    """Vectorised character sum at the rows of ``xs`` (e-coordinates).

    Terms are accumulated one group element at a time in a fixed order, so a
    row's value does not depend on how the rows are batched.
    """
    group, chi = weyl_characters(n, k)
    lam = _as_e(weight)
    xs = np.asarray(xs, dtype=float)
    if xs.shape[-1] != n + 1 or lam.shape != (n + 1,):
        raise ValueError(f"expected e-coordinates of length {n + 1}")
    acc = np.zeros(xs.shape[0], dtype=complex)
    for w, c in zip(group, chi):
        if c == 0:
            continue
        wl = lam[perm_matrix_indices(w)]
        phase = np.zeros(xs.shape[0])
        for j in range(n + 1):
            phase = phase + wl[j] * xs[:, j]
        acc = acc + c * np.exp(TWO_PI_I * phase)
    return acc


def evaluate(spec: ImmanantSpec, x) -> complex:
    """``Imm^{n+1,k}(lam, x)`` by the Weyl-group character sum."""
    return immanant_sum(spec.n, spec.k, spec.lam, x)


def evaluate_many(spec: ImmanantSpec, xs: np.ndarray) -> np.ndarray:
    return immanant_sum_many(spec.n, spec.k, spec.lam, xs)


def matrix_A(lam, x) -> np.ndarray:
    """The matrix ``exp(2 pi i l_j x_k)`` built from the e-coordinates of both arguments."""
    l = _as_e(lam)
    xe = _as_e(x)
    return np.exp(TWO_PI_I * np.outer(l, xe))


def _perm_products(M: np.ndarray):
    m = M.shape[0]
    rows = np.arange(m)
    for sigma in enumerate_group(m):
        cols = np.array(sigma.images) - 1
        yield sigma, np.prod(M[rows, cols])


def matrix_immanant(M, chi_row) -> complex:
    """``sum_sigma chi(sigma) prod_j M[j, sigma(j)]`` over all of S_m.

    ``chi_row`` maps cycle types to character values, e.g. ``character_table(m).row(k)``.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    m = M.shape[0]
    if sum(next(iter(chi_row))) != m:
        raise ValueError(f"character of S_{sum(next(iter(chi_row)))} used on a {m}x{m} matrix")
    total = 0j
    for sigma, term in _perm_products(M):
        total += chi_row[cycle_type(sigma)] * term
    return complex(total)


def class_sums(M) -> dict[tuple, complex]:
    """``C_rho``: sum of the permutation products whose permutation has cycle type ``rho``."""
    M = np.asarray(M)
    if M.shape[0] > 6:
        raise ValueError("class sums limited to m <= 6")
    sums = {rho: 0j for rho in partitions(M.shape[0])}
    for sigma, term in _perm_products(M):
        sums[cycle_type(sigma)] += term
    return sums


def permanent(M) -> complex:
    """Ryser's inclusion-exclusion formula."""
    M = np.asarray(M, dtype=complex)
    m = M.shape[0]
    total = 0j
    for r in range(1, m + 1):
        for cols in combinations(range(m), r):
            total += (-1) ** r * np.prod(M[:, cols].sum(axis=1))
    return complex((-1) ** m * total)


def determinant(M) -> complex:
    """Determinant by LU factorisation with partial pivoting (LAPACK)."""
    return complex(np.linalg.det(np.asarray(M, dtype=complex)))


@dataclass
class ExpTermSum:
    """``sum coeff * exp(2 pi i <weight, x>)`` with integer coefficients.

    Weights are lattice vectors keyed by their integer omega-coordinates; like
    terms are combined and zero coefficients dropped.
    """

    n: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def add(self, weight: tuple[int, ...], coeff: int):
        c = self.terms.get(weight, 0) + coeff
        if c:
            self.terms[weight] = c
        else:
            self.terms.pop(weight, None)

    def __add__(self, other: ExpTermSum) -> ExpTermSum:
        out = ExpTermSum(self.n, dict(self.terms))
        for w, c in other.terms.items():
            out.add(w, c)
        return out

    def scaled(self, factor: int) -> ExpTermSum:
        if factor == 0:
            return ExpTermSum(self.n)
        return ExpTermSum(self.n, {w: factor * c for w, c in self.terms.items()})

    def coefficient_total(self) -> int:
        return sum(self.terms.values())

    def __len__(self):
        return len(self.terms)

    def evaluate_many(self, xs: np.ndarray) -> np.ndarray:
        xs = np.atleast_2d(np.asarray(xs, dtype=float))
        acc = np.zeros(xs.shape[0], dtype=complex)
        for w in sorted(self.terms):
            e = np.array([float(v) for v in WeightCoords(w).exact_e()])
            acc = acc + self.terms[w] * np.exp(TWO_PI_I * (xs @ e))
        return acc

    def evaluate(self, x) -> complex:
        return complex(self.evaluate_many(_as_e(x))[0])


def _weight_images(n: int, weight: WeightCoords) -> list[tuple[int, ...]]:
    """Omega-coordinates of ``w weight`` for every ``w`` in enumeration order."""
    e = weight.exact_e()
    return [e_to_omega_exact(permute_coords(w, e)) for w in enumerate_group(n + 1)]


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def expand_weight(n: int, k: int, weight: WeightCoords) -> ExpTermSum:
    """Term sum of the character sum for any integral weight."""
    _, chi = weyl_characters(n, k)
    out = ExpTermSum(n)
    for img, c in zip(_weight_images(n, weight), chi):
        out.add(img, int(c))
    return out


def expand(spec: ImmanantSpec) -> ExpTermSum:
    """The character sum of one immanant function as an :class:`ExpTermSum`."""
    return expand_weight(spec.n, spec.k, spec.lam)


def product_expand(spec1: ImmanantSpec, spec2: ImmanantSpec) -> ExpTermSum:
    """``sum_{w, v} chi_k(w) chi_l(v) exp(2 pi i <w lam + v mu, x>)``, like terms combined."""
    if spec1.n != spec2.n:
        raise ValueError(f"rank mismatch: {spec1.n} vs {spec2.n}")
    n = spec1.n
    if n > MAX_PRODUCT_RANK:
        raise ValueError(f"product expansion has ((n+1)!)^2 terms; limited to n <= {MAX_PRODUCT_RANK}")
    _, chi_k = weyl_characters(n, spec1.k)
    _, chi_l = weyl_characters(n, spec2.k)
    img1 = _weight_images(n, spec1.lam)
    img2 = _weight_images(n, spec2.lam)
    acc = defaultdict(int)
    for a, ca in zip(img1, chi_k):
        if ca == 0:
            continue
        for b, cb in zip(img2, chi_l):
            if cb:
                acc[_add(a, b)] += int(ca) * int(cb)
    return ExpTermSum(n, {w: c for w, c in acc.items() if c})


def lemma_expand(n: int, k: int, l: int, lam: WeightCoords, mu: WeightCoords,
                 conjugate_second: bool = False) -> ExpTermSum:
    """``sum_{u, v} chi_k(u) chi_l(v) Phi(lam +- u v mu)`` with ``Phi`` the C-function.

    The sign is ``-`` when ``conjugate_second`` is set.
    """
    if lam.n != n or mu.n != n:
        raise ValueError(f"rank mismatch: expected weights of rank {n}")
    group, chi_k = weyl_characters(n, k)
    _, chi_l = weyl_characters(n, l)
    index = {w: i for i, w in enumerate(group)}
    # coefficient of each product u v
    conv = defaultdict(int)
    for u, cu in zip(group, chi_k):
        if cu == 0:
            continue
        for v, cv in zip(group, chi_l):
            if cv:
                conv[index[compose(u, v)]] += int(cu) * int(cv)
    sign = -1 if conjugate_second else 1
    mu_images = _weight_images(n, mu)
    out = defaultdict(int)
    for i, c in conv.items():
        if c == 0:
            continue
        nu = WeightCoords(_add(lam.omega, tuple(sign * a for a in mu_images[i])))
        nu_e = nu.exact_e()
        for w in group:
            out[e_to_omega_exact(permute_coords(w, nu_e))] += c
    return ExpTermSum(n, {w: c for w, c in out.items() if c})


def weyl_orbit_weights(n: int, weight: WeightCoords):
    """Pairs ``(w, w weight)`` for all ``w``, images as :class:`WeightCoords`."""
    return [(w, WeightCoords(img)) for w, img in zip(enumerate_group(n + 1), _weight_images(n, weight))]


def lemma_lhs(n: int, k: int, l: int, lam: WeightCoords, mu: WeightCoords, x,
              conjugate_second: bool = False) -> complex:
    """``sum_w Imm^k(w lam, x) Imm^l(w mu, x)`` (second factor conjugated if requested), summed directly."""
    total = 0j
    mu_imgs = dict(weyl_orbit_weights(n, mu))
    for w, wl in weyl_orbit_weights(n, lam):
        a = immanant_sum(n, k, wl, x)
        b = immanant_sum(n, l, mu_imgs[w], x)
        total += a * (np.conj(b) if conjugate_second else b)
    return complex(total)


def symmetry_residuals(spec: ImmanantSpec, w, x) -> tuple[float, float, float]:
    """Absolute residuals of the three symmetries for one group element ``w``.

    1. ``Imm(w lam, x) = Imm(lam, w^-1 x)``
    2. ``Imm(w lam, w x) = Imm(lam, x)``
    3. ``Imm(lam, x) = Imm(x, lam)``
    """
    n, k = spec.n, spec.k
    xe = _as_e(x)
    lam_e = _as_e(spec.lam)
    wl = np.array(permute_coords(w, lam_e))
    wx = np.array(permute_coords(w, xe))
    winv_x = np.array(permute_coords(inverse(w), xe))
    base = immanant_sum(n, k, lam_e, xe)
    r1 = abs(immanant_sum(n, k, wl, xe) - immanant_sum(n, k, lam_e, winv_x))
    r2 = abs(immanant_sum(n, k, wl, wx) - base)
    r3 = abs(base - immanant_sum(n, k, xe, lam_e))
    return r1, r2, r3


def symmetry_check(spec: ImmanantSpec, w, x, tol: float = 1e-10) -> bool:
    scale = max(1.0, abs(evaluate(spec, x)))
    return all(r <= tol * scale for r in symmetry_residuals(spec, w, x))


# Weyl-word expansions of the non-trivial immanants of W(A_2) and W(A_3),
# as (coefficient, word) with word (i_1, ..., i_s) meaning r_{i_1} ... r_{i_s}.
WEYL_WORD_FORMS: dict[tuple[int, int], list[tuple[int, tuple[int, ...]]]] = {
    (2, 3): [(2, ()), (-1, (2, 1)), (-1, (1, 2))],
    (3, 3): [
        (2, ()), (2, (1, 3)), (2, (2, 1, 3, 2)), (2, (3, 2, 3, 1, 2, 3)),
        (-1, (1, 2)), (-1, (2, 1)), (-1, (2, 3)), (-1, (3, 2)),
        (-1, (1, 3, 2, 1)), (-1, (1, 2, 1, 3)), (-1, (2, 3, 2, 1)), (-1, (1, 2, 3, 2)),
    ],
    (3, 4): [
        (3, ()), (1, (1,)), (1, (2,)), (1, (3,)), (1, (1, 2, 1)), (1, (2, 3, 2)),
        (1, (1, 2, 3, 2, 1)), (-1, (1, 3)), (-1, (2, 1, 3, 2)), (-1, (3, 2, 3, 1, 2, 3)),
        (-1, (1, 2, 3)), (-1, (2, 3, 1)), (-1, (3, 1, 2)), (-1, (3, 2, 1)),
        (-1, (3, 2, 3, 1, 2)), (-1, (1, 2, 1, 3, 2)),
    ],
    (3, 5): [
        (3, ()), (-1, (1,)), (-1, (2,)), (-1, (3,)), (-1, (1, 2, 1)), (-1, (2, 3, 2)),
        (-1, (1, 2, 3, 2, 1)), (-1, (1, 3)), (-1, (2, 1, 3, 2)), (-1, (3, 2, 3, 1, 2, 3)),
        (1, (1, 2, 3)), (1, (2, 3, 1)), (1, (3, 1, 2)), (1, (3, 2, 1)),
        (1, (3, 2, 3, 1, 2)), (1, (1, 2, 1, 3, 2)),
    ],
}


def word_form_value(n: int, k: int, lam, x) -> complex:
    """Evaluate the tabulated Weyl-word expansion of ``Imm^{n+1,k}``."""
    try:
        form = WEYL_WORD_FORMS[(n, k)]
    except KeyError:
        raise KeyError(f"no word expansion tabulated for n={n}, k={k}") from None
    lam_p = to_e(lam) if isinstance(lam, WeightCoords) else lam
    lam_p = lam_p if isinstance(lam_p, Point) else Point(tuple(lam_p))
    xe = _as_e(x)
    total = 0j
    for c, word in form:
        wl = apply_word(word, lam_p)
        total += c * np.exp(TWO_PI_I * float(np.dot(wl.e, xe)))
    return complex(total)


def imm33_explicit(lam, x) -> complex:
    """``2 e(l1 x1 + l2 x2 + l3 x3) - e(l1 x2 + l2 x3 + l3 x1) - e(l1 x3 + l2 x1 + l3 x2)``.

    The two subtracted exponents are the images of ``lam`` under the two
    3-cycles ``r_2 r_1`` and ``r_1 r_2``.
    """
    l = _as_e(lam)
    xe = _as_e(x)

    def e(a, b, c):
        return np.exp(TWO_PI_I * (l[0] * xe[a] + l[1] * xe[b] + l[2] * xe[c]))

    return complex(2 * e(0, 1, 2) - e(1, 2, 0) - e(2, 0, 1))


def group_order(n: int) -> int:
    return factorial(n + 1)
