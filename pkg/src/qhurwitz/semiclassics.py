"""Expansions in epsilon at ``q = exp(-epsilon)``.

Every series here is computed by exact truncated-series arithmetic.  The
``order`` argument counts coefficients *beyond the leading one*: a result of
leading exponent ``v`` is returned up to and including ``epsilon**(v + order)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .algebra import TruncatedSeries, exp_monomial, q_power_expansion
from .hurwitz import hurwitz_number
from .measures import enumerate_configs, profile_multiplicity
from .partitions import Partition, aut_order, enumerate_partitions
from .weights import WeightModel, chain_sum

DEFAULT_ORDER = 3


def _require_quantum(model: WeightModel):
    if not model.is_quantum:
        raise ValueError(f"epsilon expansions are defined for quantum models only, not {model.kind!r}")


def _zero(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs("epsilon", [], order)


def _one(order: int) -> TruncatedSeries:
    return TruncatedSeries.constant("epsilon", 1, order)


def phi_series(model: WeightModel, x: Sequence[int], order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Laurent expansion of :func:`qhurwitz.weights.phi`; leading exponent ``-len(x)``."""
    _require_quantum(model)
    x = [int(v) for v in x]
    m = len(x)
    # each factor is eps^-1 (...) and inverting eats two orders of the input
    work = order + 2
    if model.kind == "h":
        def factor(s):
            return q_power_expansion(s, work, companion=True).invert()
    else:
        def factor(s):
            return q_power_expansion(s, work).invert()
    value = chain_sum(x, factor, _zero(work), _one(work))
    if model.kind == "e":
        value = value * exp_monomial(sum(x), work)
    return value.truncate(-m + order + 1)


def _prefix_products(lam: Sequence[int]):
    for sigma in permutations(range(len(lam))):
        prefix, sums = 0, []
        for i in sigma:
            prefix += lam[i]
            sums.append(prefix)
        yield sums


def w0(lam: Sequence[int]) -> Fraction:
    return sum((Fraction(1, math.prod(s)) for s in _prefix_products(lam)), Fraction(0))


def w1(lam: Sequence[int]) -> Fraction:
    return Fraction(1, 2) * sum((Fraction(sum(s), math.prod(s)) for s in _prefix_products(lam)),
                                Fraction(0))


def weight_series(model: WeightModel, lam: Sequence[int], order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``w_G(lambda)`` at ``q = exp(-epsilon)``; leading exponent ``-len(lambda)``."""
    lam = Partition(lam)
    s = phi_series(model, lam, order) / aut_order(lam)
    if model.kind == "h" and lam.colength % 2:
        s = -s
    return s


def scaled_weight_series(model: WeightModel, lam: Sequence[int], d: int, order: int) -> TruncatedSeries:
    """``epsilon**d * w_G(lambda)`` as a power series known through ``epsilon**order``."""
    lam = Partition(lam)
    # leading exponent of eps^d w is d - len(lam) >= 0
    extra = order - (d - len(lam))
    if extra < 0:
        return _zero(order + 1)
    return weight_series(model, lam, extra).shift(d).truncate(order + 1)


def partition_function_series(model: WeightModel, d: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``epsilon**d z_d`` through ``epsilon**order``, expanded per profile then summed."""
    _require_quantum(model)
    total = _zero(order + 1)
    for lam in enumerate_partitions(d):
        total = total + scaled_weight_series(model, lam, d, order) * profile_multiplicity(lam)
    return total


# -- second path: assemble z_d as a rational function of q, then expand ----

def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _monomial(k: int, c=1) -> list:
    return [Fraction(0)] * k + [Fraction(c)]


def partition_function_rational(model: WeightModel, d: int) -> tuple:
    """``z_d = N(q) / D(q)`` with ``D = prod_{s=1}^d (1 - q^s)``; polynomials as coefficient lists.

    Every ordering contributes a product over distinct prefix sums in
    ``1..d``, so ``D`` is a common denominator.
    """
    _require_quantum(model)
    denominator = [Fraction(1)]
    for s in range(1, d + 1):
        denominator = _poly_mul(denominator, _poly_add([1], _monomial(s, -1)))
    numerator = [Fraction(0)]
    for lam in enumerate_partitions(d):
        coef = Fraction(profile_multiplicity(lam), aut_order(lam))
        if model.kind == "h" and lam.colength % 2:
            coef = -coef
        for sums in _prefix_products(lam):
            term = [coef]
            for s in range(1, d + 1):
                if s not in sums:
                    term = _poly_mul(term, _poly_add([1], _monomial(s, -1)))
            if model.kind == "eprime":
                term = _poly_mul(term, _monomial(sum(sums)))
            elif model.kind == "e":
                term = _poly_mul(term, _monomial(sum(sums) - d))
            numerator = _poly_add(numerator, term)
    return numerator, denominator


def _substitute_exp(poly: list, order: int) -> TruncatedSeries:
    """``sum_k a_k exp(-k epsilon)`` through ``epsilon**(order-1)``."""
    coeffs = [sum((a * Fraction(-k) ** j for k, a in enumerate(poly)), Fraction(0)) / math.factorial(j)
              for j in range(order)]
    return TruncatedSeries.from_coeffs("epsilon", coeffs, order)


def partition_function_series_via_q(model: WeightModel, d: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Same quantity as :func:`partition_function_series`, assembled in q before expanding."""
    num, den = partition_function_rational(model, d)
    # D vanishes to order d at epsilon = 0
    work = order + 2 * d + 1
    return (_substitute_exp(num, work) / _substitute_exp(den, work)).shift(d).truncate(order + 1)


def hurwitz_series_combination(model: WeightModel, n: int, d: int, order: int = 1) -> dict:
    """Coefficients of ``epsilon**d H^d_G(mu, nu)`` on the basis ``H(branches, mu, nu)``.

    Keys are unordered branch collections (descending tuples of partitions of
    ``n``); values list the coefficients of ``epsilon**0 .. epsilon**order``.
    Collections contributing nothing through that order are omitted.
    """
    _require_quantum(model)
    scaled = {lam: scaled_weight_series(model, lam, d, order) for lam in enumerate_partitions(d)}
    terms: dict = {}
    for lam, assignment in enumerate_configs(n, d):
        s = scaled[lam]
        if s.is_zero:
            continue
        key = tuple(sorted(assignment, reverse=True))
        terms[key] = terms[key] + s if key in terms else s
    out = {}
    for key, s in terms.items():
        coeffs = s.coefficients(0, order + 1)
        if any(coeffs):
            out[key] = coeffs
    return out


def weighted_hurwitz_series(model: WeightModel, mu, nu, d: int, order: int = 1) -> list:
    """Coefficients of ``epsilon**0 .. epsilon**order`` in ``epsilon**d H^d_G(mu, nu)``."""
    mu, nu = Partition(mu), Partition(nu)
    if mu.weight != nu.weight:
        raise ValueError(f"weight mismatch: |{tuple(mu)}| != |{tuple(nu)}|")
    n = mu.weight
    out = [Fraction(0)] * (order + 1)
    for key, coeffs in hurwitz_series_combination(model, n, d, order).items():
        h = hurwitz_number(list(key) + [mu, nu], n)
        if h:
            out = [a + c * h for a, c in zip(out, coeffs)]
    return out


def dilog_coefficient_series(k: int, order: int) -> TruncatedSeries:
    """``[z^k] Li_2(exp(-epsilon), epsilon z) = epsilon^k / (k (1 - exp(-k epsilon)))``."""
    base = q_power_expansion(k, order + 2, companion=True).invert() / k
    return base.shift(k).truncate(k - 1 + order + 1)
