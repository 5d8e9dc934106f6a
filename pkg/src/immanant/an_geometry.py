"""Root and weight geometry of A_n inside the hyperplane H = {sum l_i = 0} of R^{n+1}.

Points are stored by their e-coordinates, where the Weyl group acts by
permuting coordinates.  Weights with integer omega-coordinates are handled
exactly through :class:`fractions.Fraction` e-coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import factorial, sqrt
from typing import Sequence

import numpy as np

from .sym_core import Permutation, adjacent_decomposition, enumerate_group, inverse

TOL = 1e-12


@dataclass(frozen=True)
class Point:
    """A vector of H given by its e-coordinates ``(l_1, ..., l_{n+1})``."""

    e: tuple[float, ...]

    def __post_init__(self):
        e = tuple(float(v) for v in self.e)
        if len(e) < 2:
            raise ValueError("a point of H needs at least two e-coordinates")
        if abs(sum(e)) > TOL * max(1.0, max(abs(v) for v in e)) * len(e):
            raise ValueError(f"e-coordinates {e} do not sum to zero")
        object.__setattr__(self, "e", e)

    @property
    def n(self) -> int:
        return len(self.e) - 1

    @property
    def array(self) -> np.ndarray:
        return np.array(self.e)

    def __neg__(self):
        return Point(tuple(-v for v in self.e))

    def __add__(self, other: Point):
        return Point(tuple(a + b for a, b in zip(self.e, other.e)))

    def isclose(self, other: Point, tol: float = TOL) -> bool:
        return self.n == other.n and all(abs(a - b) <= tol for a, b in zip(self.e, other.e))


@dataclass(frozen=True)
class WeightCoords:
    """A vector of H by its omega-coordinates ``(lambda_1, ..., lambda_n)``.

    Integer coordinates describe a point of the weight lattice P and are kept
    exact; other numbers are allowed for general points.
    """

    omega: tuple

    def __post_init__(self):
        if len(self.omega) < 1:
            raise ValueError("rank must be at least 1")
        object.__setattr__(self, "omega", tuple(self.omega))

    @property
    def n(self) -> int:
        return len(self.omega)

    @property
    def is_lattice(self) -> bool:
        return all(isinstance(c, (int, np.integer)) for c in self.omega)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.omega)

    @property
    def is_strictly_dominant(self) -> bool:
        return all(c > 0 for c in self.omega)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.omega)

    def exact_e(self) -> tuple[Fraction, ...]:
        """Exact e-coordinates of a lattice weight."""
        if not self.is_lattice:
            raise TypeError("exact e-coordinates need integer omega-coordinates")
        return omega_to_e_exact(self.omega)

    def __add__(self, other: WeightCoords):
        return WeightCoords(tuple(a + b for a, b in zip(self.omega, other.omega)))

    def __neg__(self):
        return WeightCoords(tuple(-a for a in self.omega))


@dataclass(frozen=True)
class CartanData:
    n: int
    C: tuple[tuple[Fraction, ...], ...]
    C_inv: tuple[tuple[Fraction, ...], ...]


def cartan(n: int) -> CartanData:
    """Cartan matrix of A_n and its inverse, as exact rationals."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    C = tuple(
        tuple(Fraction(2 if i == j else -1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )
    C_inv = tuple(
        tuple(Fraction(min(i, j) * (n + 1 - max(i, j)), n + 1) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return CartanData(n, C, C_inv)


def omega_to_e_exact(omega: Sequence) -> tuple[Fraction, ...]:
    n = len(omega)
    total = sum(Fraction(i) * c for i, c in enumerate(omega, start=1))
    # l_j = sum_{i >= j} lambda_i - (sum_i i lambda_i) / (n + 1)
    e = []
    tail = Fraction(sum(omega))
    for j in range(n + 1):
        e.append(tail - total / (n + 1))
        if j < n:
            tail -= omega[j]
    return tuple(e)


@lru_cache(maxsize=None)
def scaled_e(omega: tuple[int, ...]) -> tuple[int, ...]:
    """``(n + 1)`` times the e-coordinates of an integral weight; exact integers."""
    return tuple(int(v * (len(omega) + 1)) for v in omega_to_e_exact(omega))


def e_to_omega_exact(e: Sequence[Fraction]) -> tuple[int, ...]:
    """Omega-coordinates of an exact lattice vector; raises if they are not integers."""
    out = []
    for a, b in zip(e, e[1:]):
        d = Fraction(a) - Fraction(b)
        if d.denominator != 1:
            raise ValueError(f"{tuple(e)} is not in the weight lattice")
        out.append(int(d))
    return tuple(out)


def omega_in_e(n: int, i: int) -> Point:
    """Fundamental weight omega_i expressed in e-coordinates."""
    if not 1 <= i <= n:
        raise ValueError(f"weight index {i} outside 1..{n}")
    return Point(tuple(float(v) for v in omega_to_e_exact([int(j == i) for j in range(1, n + 1)])))


def simple_root(n: int, i: int) -> Point:
    if not 1 <= i <= n:
        raise ValueError(f"root index {i} outside 1..{n}")
    e = [0.0] * (n + 1)
    e[i - 1], e[i] = 1.0, -1.0
    return Point(tuple(e))


def to_e(w: WeightCoords) -> Point:
    if w.is_lattice:
        return Point(tuple(float(v) for v in w.exact_e()))
    n = w.n
    total = sum(i * c for i, c in enumerate(w.omega, start=1))
    tail = float(sum(w.omega))
    e = []
    for j in range(n + 1):
        e.append(tail - total / (n + 1))
        if j < n:
            tail -= w.omega[j]
    return Point(tuple(e))


def to_omega(p: Point) -> WeightCoords:
    return WeightCoords(tuple(a - b for a, b in zip(p.e, p.e[1:])))


def inner(p: Point, q: Point) -> float:
    return sum(a * b for a, b in zip(p.e, q.e))


def permute_coords(perm: Permutation, coords: Sequence):
    """Move the coordinate in position ``i`` to position ``perm(i)``."""
    if perm.m != len(coords):
        raise ValueError(f"degree mismatch: permutation of {perm.m} acting on {len(coords)} coordinates")
    out = [None] * len(coords)
    for i, j in enumerate(perm.images):
        out[j - 1] = coords[i]
    return tuple(out)


def perm_matrix_indices(perm: Permutation) -> np.ndarray:
    """Index array ``idx`` with ``(w x)[j] = x[idx[j]]``, for vectorised actions."""
    idx = np.empty(perm.m, dtype=int)
    for i, j in enumerate(perm.images):
        idx[j - 1] = i
    return idx


def reflect(i: int, p: Point) -> Point:
    """Reflection r_i: swaps the e-coordinates ``l_i`` and ``l_{i+1}``."""
    if not 1 <= i <= p.n:
        raise ValueError(f"reflection index {i} outside 1..{p.n}")
    e = list(p.e)
    e[i - 1], e[i] = e[i], e[i - 1]
    return Point(tuple(e))


def weyl_apply(perm: Permutation, p: Point) -> Point:
    return Point(permute_coords(perm, p.e))


def weyl_apply_weight(perm: Permutation, w: WeightCoords) -> WeightCoords:
    """Exact Weyl action on a lattice weight."""
    return WeightCoords(e_to_omega_exact(permute_coords(perm, w.exact_e())))


def weyl_apply_by_reflections(perm: Permutation, p: Point) -> Point:
    """Same action as :func:`weyl_apply`, through a word in the simple reflections."""
    for i in reversed(adjacent_decomposition(perm)):
        p = reflect(i, p)
    return p


def apply_word(word: Sequence[int], p: Point) -> Point:
    """``r_{i_1} r_{i_2} ... r_{i_s} p``; the rightmost reflection acts first."""
    for i in reversed(word):
        p = reflect(i, p)
    return p


def _coords(p):
    if isinstance(p, WeightCoords):
        if p.is_lattice:
            return p.exact_e(), True
        p = to_e(p)
    return p.e, False


def orbit(p, tol: float = TOL) -> list[tuple[Permutation, object]]:
    """Distinct Weyl images of ``p`` with one representative element each.

    Integer weights are handled exactly and their images are returned as
    :class:`WeightCoords`; anything else as :class:`Point`.
    """
    coords, exact = _coords(p)
    group = enumerate_group(len(coords))
    images = []
    if exact:
        seen = {}
        for w in group:
            img = permute_coords(w, coords)
            if img not in seen:
                seen[img] = w
                images.append((w, WeightCoords(e_to_omega_exact(img))))
        return images
    found = []
    for w in group:
        img = permute_coords(w, coords)
        if not any(max(abs(a - b) for a, b in zip(img, q)) <= tol for q in found):
            found.append(img)
            images.append((w, Point(img)))
    return images


def stabilizer(p, tol: float = TOL) -> list[Permutation]:
    coords, exact = _coords(p)
    group = enumerate_group(len(coords))
    if exact:
        return [w for w in group if permute_coords(w, coords) == coords]
    return [
        w for w in group
        if max(abs(a - b) for a, b in zip(permute_coords(w, coords), coords)) <= tol
    ]


def _det_exact(rows):
    a = [list(map(Fraction, r)) for r in rows]
    size = len(a)
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if a[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, size):
            f = a[r][c] / a[c][c]
            for j in range(c, size):
                a[r][j] -= f * a[c][j]
    return det


@dataclass(frozen=True)
class FundamentalDomain:
    """The simplex ``F = conv(0, omega_1, ..., omega_n)``.

    A point lies in F iff its omega-coordinates are nonnegative with sum at
    most 1; these are its barycentric weights on the vertices omega_i.
    """

    n: int
    vertices: tuple[Point, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    volume_squared: Fraction

    @property
    def volume(self) -> float:
        return sqrt(self.volume_squared)

    def barycentric(self, p: Point) -> tuple[float, ...]:
        lam = to_omega(p).omega
        return (1.0 - sum(lam),) + tuple(lam)

    def contains(self, p: Point, tol: float = TOL) -> bool:
        return all(b >= -tol for b in self.barycentric(p))

    def contains_array(self, xs: np.ndarray, tol: float = TOL) -> np.ndarray:
        """Vectorised membership for rows of e-coordinates."""
        lam = xs[:, :-1] - xs[:, 1:]
        return np.all(lam >= -tol, axis=1) & (lam.sum(axis=1) <= 1.0 + tol)


def fundamental_domain(n: int) -> FundamentalDomain:
    if n < 1:
        raise ValueError("rank must be at least 1")
    omegas = [omega_to_e_exact([int(j == i) for j in range(1, n + 1)]) for i in range(1, n + 1)]
    gram = tuple(tuple(sum(a * b for a, b in zip(u, v)) for v in omegas) for u in omegas)
    vol2 = _det_exact(gram) / factorial(n) ** 2
    vertices = (Point((0.0,) * (n + 1)),) + tuple(Point(tuple(float(c) for c in u)) for u in omegas)
    return FundamentalDomain(n, vertices, gram, vol2)


def _omega_matrix(n: int) -> np.ndarray:
    """Rows are omega_1, ..., omega_n in e-coordinates."""
    return np.array([omega_in_e(n, i).e for i in range(1, n + 1)])


def sample_F(n: int, count: int, seed=None) -> np.ndarray:
    """``count`` uniform points of F as rows of e-coordinates.

    ``seed`` may be an int or a :class:`numpy.random.Generator`.
    """
    if count < 1:
        raise ValueError("count must be positive")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    bary = rng.dirichlet(np.ones(n + 1), size=count)
    return bary[:, 1:] @ _omega_matrix(n)


def sample_F_tilde(n: int, count: int, seed=None) -> np.ndarray:
    """Uniform points of the union of Weyl images of F: ``w x`` with ``w`` uniform, ``x`` uniform in F."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    xs = sample_F(n, count, rng)
    group = enumerate_group(n + 1)
    idx = np.stack([perm_matrix_indices(w) for w in group])
    choice = rng.integers(len(group), size=count)
    return np.take_along_axis(xs, idx[choice], axis=1)


def plane_basis(n: int) -> np.ndarray:
    """Orthonormal basis of H (rows), ``u_k = (1, ..., 1, -k, 0, ..., 0) / sqrt(k (k + 1))``."""
    basis = np.zeros((n, n + 1))
    for k in range(1, n + 1):
        basis[k - 1, :k] = 1.0
        basis[k - 1, k] = -k
        basis[k - 1] /= sqrt(k * (k + 1))
    return basis


def tiles_containing(p: Point, tol: float = TOL) -> list[Permutation]:
    """Weyl elements ``w`` with ``p`` in ``w F``."""
    dom = fundamental_domain(p.n)
    return [w for w in enumerate_group(p.n + 1) if dom.contains(weyl_apply(inverse(w), p), tol)]

