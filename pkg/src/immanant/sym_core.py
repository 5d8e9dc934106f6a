"""Permutations of {1, ..., m} in one-line notation.

A permutation doubles as an element of the Weyl group W(A_{m-1}), which acts
on e-coordinates by moving the coordinate at position i to position p(i).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import factorial, prod

MAX_ENUMERATION_DEGREE = 9

CycleType = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., m}, stored as its images ``(p(1), ..., p(m))``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if not images:
            raise ValueError("permutation degree must be at least 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __matmul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __repr__(self):
        return f"Permutation{self.images}"

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element, fixed points included."""
        seen = set()
        out = []
        for start in range(1, self.m + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "(1)"
        return "".join("(" + "".join(str(i) for i in c) + ")" for c in nontrivial)

    @property
    def sign(self) -> int:
        return (-1) ** sum(len(c) - 1 for c in self.cycles())


def identity(m: int) -> Permutation:
    return Permutation(tuple(range(1, m + 1)))


def transposition(m: int, i: int, j: int | None = None) -> Permutation:
    """The transposition swapping ``i`` and ``j`` (default ``i + 1``) in S_m."""
    if j is None:
        j = i + 1
    if not (1 <= i <= m and 1 <= j <= m) or i == j:
        raise ValueError(f"invalid transposition ({i} {j}) in S_{m}")
    images = list(range(1, m + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``, i.e. ``i -> p(q(i))``."""
    if p.m != q.m:
        raise ValueError(f"degree mismatch: {p.m} vs {q.m}")
    return Permutation(tuple(p.images[j - 1] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.m
    for i, j in enumerate(p.images, start=1):
        inv[j - 1] = i
    return Permutation(tuple(inv))


def cycle_type(p: Permutation) -> CycleType:
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def from_cycles(m: int, *cycles: tuple[int, ...]) -> Permutation:
    """Build a permutation of degree ``m`` from disjoint cycles, e.g. ``from_cycles(4, (1, 2), (3, 4))``."""
    images = list(range(1, m + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b
    return Permutation(tuple(images))


def adjacent_decomposition(p: Permutation) -> list[int]:
    """Word ``[i_1, ..., i_s]`` with ``p = t_{i_1} o ... o t_{i_s}``, ``t_i = (i i+1)``.

    Obtained by bubble sorting the one-line notation, so it is not a reduced
    word in general; its length still has the parity of ``sign(p)``.
    """
    arr = list(p.images)
    swaps = []
    # bubble sort: arr o t_{s_1} o t_{s_2} ... = identity
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append(i + 1)
                changed = True
    # p o t_{s_1} o ... o t_{s_r} = id  =>  p = t_{s_r} o ... o t_{s_1}
    return swaps[::-1]


def word_to_permutation(m: int, word) -> Permutation:
    """Product ``t_{i_1} o ... o t_{i_s}`` of adjacent transpositions in S_m."""
    result = identity(m)
    for i in word:
        result = compose(result, transposition(m, i))
    return result


@lru_cache(maxsize=None)
def _enumerate(m: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(images) for images in _itertools_permutations(range(1, m + 1)))


def enumerate_group(m: int) -> tuple[Permutation, ...]:
    """All ``m!`` elements of S_m, identity first."""
    if not 1 <= m <= MAX_ENUMERATION_DEGREE:
        raise ValueError(f"degree {m} outside supported range 1..{MAX_ENUMERATION_DEGREE}")
    return _enumerate(m)


@lru_cache(maxsize=None)
def partitions(m: int) -> tuple[CycleType, ...]:
    """Partitions of ``m`` in reverse-lexicographic order, ``(m)`` first and ``(1^m)`` last."""
    if m < 1:
        raise ValueError("m must be positive")

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - part, part):
                yield (part,) + rest

    return tuple(gen(m, m))


def z_factor(shape: CycleType) -> int:
    """Centralizer order ``prod_j j^{m_j} m_j!`` of a permutation with cycle type ``shape``."""
    return prod(j**mult * factorial(mult) for j, mult in Counter(shape).items())


def class_size(shape: CycleType) -> int:
    return factorial(sum(shape)) // z_factor(shape)


def class_representative(shape: CycleType) -> Permutation:
    """The permutation with consecutive cycles ``(1 ... a)(a+1 ... a+b)...``."""
    cycles = []
    start = 1
    for part in shape:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return from_cycles(sum(shape), *cycles)
