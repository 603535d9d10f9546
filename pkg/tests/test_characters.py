import math
from itertools import permutations

import pytest

from qhurwitz.characters import CharacterTable, character, dimension
from qhurwitz.hurwitz import cycle_type
from qhurwitz.partitions import enumerate_partitions, z_order

S4_TABLE = {
    (4,): [1, 1, 1, 1, 1],
    (3, 1): [3, 1, -1, 0, -1],
    (2, 2): [2, 0, 2, -1, 0],
    (2, 1, 1): [3, -1, -1, 0, 1],
    (1, 1, 1, 1): [1, -1, 1, 1, -1],
}
S4_CLASSES = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]


def test_s4_table():
    for lam, row in S4_TABLE.items():
        assert [character(lam, mu) for mu in S4_CLASSES] == row


def test_examples():
    for mu in enumerate_partitions(5):
        assert character((5,), mu) == 1
    assert character((1, 1, 1), (3,)) == 1
    assert character((2, 1), (3,)) == -1
    assert character((3, 1, 1), (2, 2, 1)) == -2
    assert dimension((2, 1)) == 2
    assert dimension((2, 2)) == 2


def test_weight_mismatch():
    with pytest.raises(ValueError):
        character((2, 1), (2,))


def _sign(perm):
    return (-1) ** (len(perm) - len(cycle_type(perm)))


@pytest.mark.parametrize("n", range(1, 6))
def test_sign_character_by_brute_force(n):
    # the sign representation read off actual permutations
    sign = {}
    for p in permutations(range(n)):
        sign[cycle_type(p)] = _sign(p)
    for mu, s in sign.items():
        assert character((1,) * n, mu) == s


@pytest.mark.parametrize("n", range(1, 6))
def test_standard_character_is_fixed_points_minus_one(n):
    if n < 2:
        return
    for p in permutations(range(n)):
        fixed = sum(1 for i, j in enumerate(p) if i == j)
        assert character((n - 1, 1), cycle_type(p)) == fixed - 1


@pytest.mark.parametrize("n", range(1, 9))
def test_orthogonality(n):
    parts = enumerate_partitions(n)
    assert sum(dimension(lam) ** 2 for lam in parts) == math.factorial(n)
    for lam in parts:
        assert character(lam, (1,) * n) == dimension(lam)
    for mu in parts:
        for nu in parts:
            s = sum(character(lam, mu) * character(lam, nu) for lam in parts)
            assert s == (z_order(mu) if mu == nu else 0)


def test_table_dump_load(tmp_path):
    t = CharacterTable()
    for lam in enumerate_partitions(5):
        for mu in enumerate_partitions(5):
            t.character(lam, mu)
    path = tmp_path / "chars.json"
    t.dump(path)
    u = CharacterTable()
    u.load(path)
    assert len(u) == len(t)
    assert all(u.character(lam, mu) == t.character(lam, mu)
               for lam in enumerate_partitions(5) for mu in enumerate_partitions(5))


def test_table_threaded():
    from concurrent.futures import ThreadPoolExecutor
    t = CharacterTable()
    pairs = [(lam, mu) for lam in enumerate_partitions(7) for mu in enumerate_partitions(7)]
    with ThreadPoolExecutor(4) as pool:
        values = list(pool.map(lambda p: t.character(*p), pairs))
    assert values == [character(*p) for p in pairs]
