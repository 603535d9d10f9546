import itertools
import random
from fractions import Fraction

import pytest

from qhurwitz.hurwitz import hurwitz_number, hurwitz_number_oracle
from qhurwitz.partitions import enumerate_partitions, hook_product, special_partition

F = Fraction


def test_examples():
    assert hurwitz_number([(1, 1)], 2) == F(1, 2)
    assert hurwitz_number([(2,), (2,)], 2) == F(1, 2)
    assert hurwitz_number([(3,), (3,)], 3) == F(1, 3)
    assert hurwitz_number([(2, 1), (2, 1)], 3) == F(1, 2)
    assert hurwitz_number([(2, 1), (3,), (2, 1)], 3) == 1
    assert hurwitz_number_oracle([(2,), (2,)], 2) == F(1, 2)
    assert hurwitz_number_oracle([(3,), (2, 1)], 3) == 0
    assert hurwitz_number_oracle([(2, 1), (3,), (2, 1)], 3) == 1


def test_empty_profile_list():
    for n in range(1, 6):
        want = sum(F(1, hook_product(lam) ** 2) for lam in enumerate_partitions(n))
        assert hurwitz_number([], n) == want


def test_weight_mismatch():
    with pytest.raises(ValueError):
        hurwitz_number([(2, 1), (2,)], 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_exhaustive(n):
    parts = enumerate_partitions(n)
    for k in range(1, 4):
        for profiles in itertools.product(parts, repeat=k):
            assert hurwitz_number(profiles, n) == hurwitz_number_oracle(profiles, n)


def test_oracle_random():
    rng = random.Random(20241015)
    for _ in range(100):
        n = rng.randint(1, 6)
        k = rng.randint(1, 4)
        parts = enumerate_partitions(n)
        profiles = [rng.choice(parts) for _ in range(k)]
        assert hurwitz_number(profiles, n) == hurwitz_number_oracle(profiles, n)


def test_symmetry():
    profiles = [(2, 1, 1), (3, 1), (2, 2), (2, 1, 1)]
    value = hurwitz_number(profiles, 4)
    for perm in itertools.permutations(profiles):
        assert hurwitz_number(perm, 4) == value


@pytest.mark.parametrize("n", range(2, 6))
def test_parity_vanishing(n):
    two = special_partition(2, 1, n)
    ident = (1,) * n
    for count in (1, 3):
        assert hurwitz_number([two] * count + [ident, ident], n) == 0
