"""Weights attached to colength profiles, evaluated exactly at rational q.

Three quantum families are parametrized by q:

* ``eprime``: product generating function with parameters ``c_i = q**i`` (i >= 1);
* ``e``: product generating function with ``c_i = q**(i-1)``;
* ``h``: inverse-product generating function with ``c_i = q**(i-1)``.

``exp`` is the classical exponential weight and ``product`` /
``inverse-product`` carry a finite parameter list ``c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .partitions import Partition, aut_order, distinct_permutations

QUANTUM_KINDS = ("eprime", "e", "h")
KINDS = QUANTUM_KINDS + ("exp", "product", "inverse-product")


@dataclass(frozen=True)
class WeightModel:
    kind: str
    c: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown weight model {self.kind!r}; expected one of {', '.join(KINDS)}")
        c = tuple(Fraction(x) for x in self.c)
        if self.kind in ("product", "inverse-product") and not c:
            raise ValueError(f"model {self.kind!r} needs a nonempty parameter list")
        object.__setattr__(self, "c", c)

    @classmethod
    def product(cls, c) -> "WeightModel":
        return cls("product", tuple(c))

    @classmethod
    def inverse_product(cls, c) -> "WeightModel":
        return cls("inverse-product", tuple(c))

    @property
    def is_quantum(self) -> bool:
        return self.kind in QUANTUM_KINDS

    @property
    def is_inverse(self) -> bool:
        """Inverse-product type: weights are forgotten functions and carry a sign."""
        return self.kind in ("h", "inverse-product")

    @property
    def label(self) -> str:
        if self.c:
            return f"{self.kind}[{','.join(str(x) for x in self.c)}]"
        return self.kind

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.c:
            out["c"] = [str(x) for x in self.c]
        return out


EPRIME = WeightModel("eprime")
E = WeightModel("e")
H = WeightModel("h")
EXP = WeightModel("exp")


def check_q(q) -> Fraction:
    if q is None:
        raise ValueError("this weight model needs a value of q")
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError(f"q must lie strictly between 0 and 1, got {q}")
    return q


def chain_sum(x: Sequence[int], factor: Callable, zero, one):
    """``sum over orderings sigma of prod_j factor(x_sigma(1) + ... + x_sigma(j))``.

    The product only depends on the set of indices used so far, so the sum over
    all m! orderings is accumulated over subsets (2^m states) instead.  Works for
    any ring whose elements support ``+`` and ``*``.
    """
    m = len(x)
    if m == 0:
        return one
    sums = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        sums[mask] = sums[mask & (mask - 1)] + x[low]
    cache = {}
    table = [zero] * (1 << m)
    table[0] = one
    for mask in range(1, 1 << m):
        acc = zero
        bits = mask
        while bits:
            low = bits & -bits
            acc = acc + table[mask ^ low]
            bits ^= low
        s = sums[mask]
        if s not in cache:
            cache[s] = factor(s)
        table[mask] = acc * cache[s]
    return table[(1 << m) - 1]


def phi(model: WeightModel, x: Sequence[int], q) -> Fraction:
    """Sum over orderings of the product of per-prefix factors for a quantum model.

    ``eprime``: factor ``1/(q**-s - 1)``; ``e``: the ``eprime`` value times
    ``q**-sum(x)``; ``h``: factor ``1/(1 - q**s)`` (unsigned).
    """
    if not model.is_quantum:
        raise ValueError(f"phi is defined for quantum models only, not {model.kind!r}")
    q = check_q(q)
    x = [int(v) for v in x]
    if any(v < 1 for v in x):
        raise ValueError(f"phi needs positive integers, got {x}")
    if model.kind == "h":
        return chain_sum(x, lambda s: 1 / (1 - q ** s), Fraction(0), Fraction(1))
    value = chain_sum(x, lambda s: 1 / (q ** -s - 1), Fraction(0), Fraction(1))
    if model.kind == "e":
        value *= q ** -sum(x)
    return value


def _sign(lam: Partition) -> int:
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def _composition_sum(alpha: Sequence[int], c: Sequence[Fraction], weak: bool) -> Fraction:
    """``sum over i_1 < ... < i_k`` (or ``<=`` if weak) of ``prod_j c[i_j]**alpha_j``."""
    k = len(alpha)
    dp = [Fraction(0)] * (k + 1)
    dp[0] = Fraction(1)
    for ci in c:
        powers = [ci ** a for a in alpha]
        if weak:
            for j in range(1, k + 1):
                dp[j] += dp[j - 1] * powers[j - 1]
        else:
            for j in range(k, 0, -1):
                dp[j] += dp[j - 1] * powers[j - 1]
    return dp[k]


def monomial_eval(lam: Sequence[int], c: Sequence) -> Fraction:
    """Monomial symmetric function ``m_lambda`` on a finite list of values."""
    lam = Partition(lam)
    c = [Fraction(v) for v in c]
    return sum((_composition_sum(alpha, c, weak=False) for alpha in distinct_permutations(lam)),
               Fraction(0))


def forgotten_eval(lam: Sequence[int], c: Sequence) -> Fraction:
    """Forgotten symmetric function ``f_lambda`` on a finite list, sign included."""
    lam = Partition(lam)
    c = [Fraction(v) for v in c]
    total = sum((_composition_sum(alpha, c, weak=True) for alpha in distinct_permutations(lam)),
                Fraction(0))
    return _sign(lam) * total


def classical_weight(lam: Sequence[int]) -> Fraction:
    """Exponential weight: ``1/d!`` on ``(1^d)``, zero elsewhere."""
    lam = Partition(lam)
    if all(p == 1 for p in lam):
        return Fraction(1, math.factorial(len(lam)))
    return Fraction(0)


def weight_profile(model: WeightModel, lam: Sequence[int], q=None) -> Fraction:
    """Weight ``w_G(lambda)`` of a colength profile ``lambda``."""
    lam = Partition(lam)
    if model.kind == "exp":
        return classical_weight(lam)
    if model.kind == "product":
        return monomial_eval(lam, model.c)
    if model.kind == "inverse-product":
        return forgotten_eval(lam, model.c)
    value = phi(model, lam, q) / aut_order(lam)
    if model.kind == "h":
        value *= _sign(lam)
    return value


def colength_profile(branch_profiles: Sequence[Sequence[int]]) -> Partition:
    colengths = [sum(mu) - len(mu) for mu in branch_profiles]
    if any(g == 0 for g in colengths):
        raise ValueError("branch profiles must not include the identity profile (colength 0)")
    return Partition.from_parts(colengths)


def weight_W(model: WeightModel, branch_profiles: Sequence[Sequence[int]], q=None) -> Fraction:
    """Weight of a list of branch profiles; depends only on their colengths."""
    return weight_profile(model, colength_profile(branch_profiles), q)
