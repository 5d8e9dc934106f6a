from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from immanant.sym_core import (
    Permutation,
    adjacent_decomposition,
    class_size,
    compose,
    cycle_type,
    enumerate_group,
    identity,
    inverse,
    partitions,
    word_to_permutation,
    z_factor,
)


def perms(max_m=6):
    return st.integers(1, max_m).flatmap(
        lambda m: st.permutations(list(range(1, m + 1))).map(lambda p: Permutation(tuple(p)))
    )


def test_enumerate_s2():
    assert enumerate_group(2) == (Permutation((1, 2)), Permutation((2, 1)))


def test_enumerate_sizes_and_identity_first():
    for m in range(1, 6):
        g = enumerate_group(m)
        assert len(g) == factorial(m) == len(set(g))
        assert g[0] == identity(m)


def test_s4_class_sizes():
    counts = Counter(cycle_type(p) for p in enumerate_group(4))
    assert sorted(counts.values()) == [1, 3, 6, 6, 8]
    assert counts[(1, 1, 1, 1)] == 1
    assert counts[(2, 1, 1)] == 6
    assert counts[(2, 2)] == 3
    assert counts[(3, 1)] == 8
    assert counts[(4,)] == 6


@pytest.mark.parametrize("m", [0, 10])
def test_enumerate_out_of_range(m):
    with pytest.raises(ValueError):
        enumerate_group(m)


def test_compose_example():
    assert compose(Permutation((2, 1, 3)), Permutation((1, 3, 2))) == Permutation((2, 3, 1))


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_invalid_permutation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


@pytest.mark.parametrize(
    "images, expected",
    [((1, 2, 3, 4), (1, 1, 1, 1)), ((2, 1, 4, 3), (2, 2)), ((2, 3, 4, 1), (4,))],
)
def test_cycle_type(images, expected):
    assert cycle_type(Permutation(images)) == expected


def test_adjacent_decomposition_examples():
    assert adjacent_decomposition(identity(3)) == []
    assert adjacent_decomposition(Permutation((2, 1, 3))) == [1]
    p = Permutation((3, 1, 2))
    word = adjacent_decomposition(p)
    assert len(word) >= 2 and len(word) % 2 == 0
    assert word_to_permutation(3, word) == p


@pytest.mark.parametrize("m", range(1, 6))
def test_adjacent_decomposition_round_trip(m):
    for p in enumerate_group(m):
        word = adjacent_decomposition(p)
        assert word_to_permutation(m, word) == p
        assert (-1) ** len(word) == p.sign


def test_partitions():
    assert partitions(1) == ((1,),)
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))
    assert len(partitions(4)) == 5
    assert partitions(5)[0] == (5,) and partitions(5)[-1] == (1,) * 5


@pytest.mark.parametrize("m", range(1, 7))
def test_class_sizes_from_centralizers(m):
    counts = Counter(cycle_type(p) for p in enumerate_group(m))
    assert set(counts) == set(partitions(m))
    assert sum(counts.values()) == factorial(m)
    for rho, c in counts.items():
        assert c == class_size(rho) == factorial(m) // z_factor(rho)


@given(perms())
def test_inverse_is_group_inverse(p):
    assert compose(p, inverse(p)) == identity(p.m)
    assert compose(p, identity(p.m)) == p


@given(perms(), st.data())
def test_cycle_type_is_class_function(p, data):
    q = data.draw(st.permutations(list(range(1, p.m + 1))).map(lambda x: Permutation(tuple(x))))
    assert cycle_type(compose(compose(q, p), inverse(q))) == cycle_type(p)


@given(perms(5), st.data())
def test_compose_associative(p, data):
    draw = lambda: data.draw(st.permutations(list(range(1, p.m + 1))).map(lambda x: Permutation(tuple(x))))
    q, r = draw(), draw()
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
