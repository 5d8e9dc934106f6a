"""Irreducible characters of the symmetric group S_m.

Values come from the Murnaghan-Nakayama rule and are exact Python ints.
Rows are indexed the way immanants are indexed: ``k = 1`` is the trivial
character, ``k = 2`` the sign character, and the remaining characters follow
by increasing degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

import numpy as np

from .sym_core import (
    CycleType,
    Permutation,
    class_size,
    compose,
    cycle_type,
    enumerate_group,
    inverse,
    partitions,
)

MAX_TABLE_DEGREE = 8


def _beta_set(shape: CycleType) -> tuple[int, ...]:
    length = len(shape)
    return tuple(part + length - 1 - i for i, part in enumerate(shape))


def _shape_from_beta(beta) -> CycleType:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    shape = tuple(b - (length - 1 - i) for i, b in enumerate(beta))
    return tuple(p for p in shape if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: CycleType, rho: CycleType) -> int:
    if not rho:
        return 1 if not shape else 0
    r, rest = rho[0], rho[1:]
    beta = _beta_set(shape)
    members = set(beta)
    total = 0
    # each removable border strip of length r is a move b -> b - r on the beta-set
    for b in beta:
        c = b - r
        if c < 0 or c in members:
            continue
        height = sum(1 for x in beta if c < x < b)
        reduced = _shape_from_beta([x for x in beta if x != b] + [c])
        total += (-1) ** height * _mn(reduced, rest)
    return total


def mn_value(shape: CycleType, rho: CycleType) -> int:
    """Value of the irreducible character labelled by ``shape`` on the class ``rho``.

    Both arguments are partitions of the same integer.
    """
    shape = tuple(sorted(shape, reverse=True))
    rho = tuple(sorted(rho, reverse=True))
    if sum(shape) != sum(rho):
        raise ValueError(f"size mismatch: {shape} is a partition of {sum(shape)}, {rho} of {sum(rho)}")
    return _mn(shape, rho)


def _order_shapes(m: int) -> list[CycleType]:
    shapes = list(partitions(m))
    trivial, sign = (m,), (1,) * m
    if m == 1:
        return [trivial]
    ident = (1,) * m
    transp = (2,) + (1,) * (m - 2)
    rest = [s for s in shapes if s not in (trivial, sign)]
    # ties in degree: larger value on a transposition first, then partition order
    rest.sort(key=lambda s: (mn_value(s, ident), -mn_value(s, transp), shapes.index(s)))
    return [trivial, sign] + rest


@dataclass(frozen=True)
class CharacterTable:
    """Character table of S_m.

    ``rows[k - 1][c]`` is the value of character ``k`` (immanant ordering) on the
    class ``classes[c]``; columns follow :func:`partitions` order.
    """

    m: int
    classes: tuple[CycleType, ...]
    shapes: tuple[CycleType, ...]
    rows: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]
    _col: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_col", {c: i for i, c in enumerate(self.classes)})

    @property
    def n_chars(self) -> int:
        return len(self.rows)

    @property
    def order(self) -> int:
        return factorial(self.m)

    def degree(self, k: int) -> int:
        return self.value(k, (1,) * self.m)

    def value(self, k: int, rho: CycleType) -> int:
        if not 1 <= k <= self.n_chars:
            raise IndexError(f"character index {k} outside 1..{self.n_chars}")
        return self.rows[k - 1][self._col[tuple(rho)]]

    def __call__(self, k: int, g: Permutation) -> int:
        return self.value(k, cycle_type(g))

    def row(self, k: int) -> dict[CycleType, int]:
        """Character ``k`` as a class -> value mapping."""
        return dict(zip(self.classes, self.rows[k - 1]))

    def ordering_map(self) -> dict[int, CycleType]:
        """Index k -> partition labelling the irreducible representation."""
        return {k: s for k, s in enumerate(self.shapes, start=1)}


@lru_cache(maxsize=None)
def character_table(m: int) -> CharacterTable:
    if not 1 <= m <= MAX_TABLE_DEGREE:
        raise ValueError(f"degree {m} outside supported range 1..{MAX_TABLE_DEGREE}")
    classes = partitions(m)
    shapes = tuple(_order_shapes(m))
    rows = tuple(tuple(mn_value(s, c) for c in classes) for s in shapes)
    return CharacterTable(
        m=m,
        classes=classes,
        shapes=shapes,
        rows=rows,
        class_sizes=tuple(class_size(c) for c in classes),
    )


def row_orthogonality_check(t: CharacterTable) -> bool:
    """Exact check of ``sum_g chi_k(g) chi_l(g) = m! delta_kl`` for every pair."""
    for k in range(t.n_chars):
        for l in range(t.n_chars):
            s = sum(size * a * b for size, a, b in zip(t.class_sizes, t.rows[k], t.rows[l]))
            if s != (t.order if k == l else 0):
                return False
    return True


def column_orthogonality_check(t: CharacterTable) -> bool:
    """Exact check of ``sum_k chi_k(rho) chi_k(sigma) = (m!/|rho|) delta_{rho sigma}``."""
    for a, (rho, size) in enumerate(zip(t.classes, t.class_sizes)):
        for b in range(len(t.classes)):
            s = sum(row[a] * row[b] for row in t.rows)
            expected = t.order // size if a == b else 0
            if s != expected:
                return False
    return True


def convolution_sum(t: CharacterTable, k: int, l: int, h: Permutation) -> int:
    """``sum_{g in S_m} chi_k(h g^-1) chi_l(g)`` by full enumeration."""
    if h.m != t.m:
        raise ValueError(f"degree mismatch: {h.m} vs {t.m}")
    return sum(t(k, compose(h, inverse(g))) * t(l, g) for g in enumerate_group(t.m))


def convolution_check(t: CharacterTable, k: int, l: int, h: Permutation) -> bool:
    """Exact check of ``sum_g chi_k(h g^-1) chi_l(g) = delta_kl (m!/d_k) chi_k(h)``."""
    lhs = convolution_sum(t, k, l, h)
    rhs = (t.order // t.degree(k)) * t(k, h) if k == l else 0
    return lhs == rhs


def convolution_array(t: CharacterTable) -> np.ndarray:
    """``out[k-1, l-1, i] = sum_g chi_k(h_i g^-1) chi_l(g)`` for every ``h_i`` in enumeration order."""
    group = enumerate_group(t.m)
    col = {c: i for i, c in enumerate(t.classes)}
    cls = np.array([col[cycle_type(g)] for g in group])
    inv = [inverse(g) for g in group]
    prod_cls = np.array([[col[cycle_type(compose(h, gi))] for gi in inv] for h in group])
    X = np.array(t.rows, dtype=np.int64)
    left = X[:, prod_cls]            # (k, h, g)
    right = X[:, cls]                # (l, g)
    return np.einsum("khg,lg->klh", left, right)


def convolution_check_all(t: CharacterTable) -> bool:
    """:func:`convolution_check` for all ``k, l`` and every group element at once."""
    group = enumerate_group(t.m)
    got = convolution_array(t)
    X = np.array([[t(k, h) for h in group] for k in range(1, t.n_chars + 1)], dtype=np.int64)
    scale = np.array([t.order // t.degree(k) for k in range(1, t.n_chars + 1)], dtype=np.int64)
    expected = np.zeros_like(got)
    idx = np.arange(t.n_chars)
    expected[idx, idx, :] = scale[:, None] * X
    return bool(np.array_equal(got, expected))
