"""Classical Hurwitz numbers.

The production path is the character formula
``H = sum_lambda h_lambda^(k-2) prod_i chi_lambda(mu_i) / z_(mu_i)``.
:func:`hurwitz_number_oracle` recomputes the same number without characters,
by convolving class sums in the center of the group algebra.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .characters import character
from .partitions import Partition, enumerate_partitions, hook_product, z_order

ORACLE_MAX_N = 8


def _check_profiles(profiles, n):
    for mu in profiles:
        if sum(mu) != n:
            raise ValueError(f"profile {tuple(mu)} is not a partition of n={n}")


def hurwitz_number(profiles: Sequence[Sequence[int]], n: int) -> Fraction:
    profiles = [Partition(mu) for mu in profiles]
    _check_profiles(profiles, n)
    k = len(profiles)
    zs = [z_order(mu) for mu in profiles]
    total = Fraction(0)
    for lam in enumerate_partitions(n):
        prod = 1
        for mu in profiles:
            prod *= character(lam, mu)
            if prod == 0:
                break
        if prod == 0:
            continue
        total += Fraction(hook_product(lam)) ** (k - 2) * prod
    return total / math.prod(zs)


def cycle_type(perm: Sequence[int]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return Partition.from_parts(lengths)


def representative(mu: Sequence[int]) -> tuple:
    """A permutation of cycle type ``mu`` built from consecutive cycles."""
    perm, start = [], 0
    for part in mu:
        perm.extend(start + (i + 1) % part for i in range(part))
        start += part
    return tuple(perm)


@lru_cache(maxsize=None)
def structure_constants(n: int) -> dict:
    """``c[(alpha, beta, gamma)] = #{(x, y) in C_alpha x C_beta : x y = g_gamma}``."""
    if n > ORACLE_MAX_N:
        raise ValueError(f"class-algebra oracle is limited to n <= {ORACLE_MAX_N}")
    classes = enumerate_partitions(n)
    perms = list(itertools.permutations(range(n)))
    types = {p: cycle_type(p) for p in perms}
    table: dict = {}
    for gamma in classes:
        g = representative(gamma)
        for x in perms:
            inv = [0] * n
            for i, xi in enumerate(x):
                inv[xi] = i
            # (x^-1 g)(i) = x^-1(g(i)); permutations compose right to left
            y = tuple(inv[g[i]] for i in range(n))
            key = (types[x], types[y], gamma)
            table[key] = table.get(key, 0) + 1
    return table


def class_multiply(vector: dict, alpha: Partition, n: int) -> dict:
    """Multiply a central element ``sum_beta v_beta C_beta`` by the class sum ``C_alpha``."""
    consts = structure_constants(n)
    out: dict = {}
    for (a, b, gamma), c in consts.items():
        if a != alpha or b not in vector:
            continue
        out[gamma] = out.get(gamma, 0) + vector[b] * c
    return {k: v for k, v in out.items() if v}


def hurwitz_number_oracle(profiles: Sequence[Sequence[int]], n: int) -> Fraction:
    if n > ORACLE_MAX_N:
        raise ValueError(f"class-algebra oracle is limited to n <= {ORACLE_MAX_N}")
    profiles = [Partition(mu) for mu in profiles]
    _check_profiles(profiles, n)
    identity = Partition([1] * n)
    vector = {identity: 1}
    for mu in profiles:
        vector = class_multiply(vector, mu, n)
    return Fraction(vector.get(identity, 0), math.factorial(n))
