"""Claims ledger: stated coefficient values next to exact recomputations.

Each :class:`ClaimRecord` holds a value as stated (``claimed``) and the value
recomputed by the engine (``computed``); the record is ``confirmed`` exactly
when the two are equal.  Stated values live only in this module and are never
consulted by the computational code paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Any

from .algebra import TruncatedSeries
from .hurwitz import hurwitz_number
from .measures import (config_partition_function, enumerate_configs, fiber_size,
                       ordered_tuple_count, partition_function, profile_multiplicity)
from .partitions import (Partition, aut_order, count_partitions_with_length, enumerate_partitions,
                         partition_count, special_partition)
from .semiclassics import (dilog_coefficient_series, hurwitz_series_combination,
                           partition_function_series, phi_series, scaled_weight_series,
                           weight_series, w0, w1)
from .tau import (classical_content_product, closed_form_coefficient, content_product,
                  dilog_series, verify_generating_identity, weight_gen_series)
from .weights import EPRIME, WeightModel, classical_weight, monomial_eval

CONFIRMED = "confirmed"
DISCREPANT = "discrepant"
MODELS = (WeightModel("eprime"), WeightModel("e"), WeightModel("h"))


def to_jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, TruncatedSeries):
        return value.to_json()
    if isinstance(value, Partition):
        return list(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    claimed: Any
    computed: Any
    note: str = ""

    @property
    def status(self) -> str:
        return CONFIRMED if self.claimed == self.computed else DISCREPANT

    def to_json(self) -> dict:
        return {"id": self.claim_id, "status": self.status,
                "claimed": to_jsonable(self.claimed), "computed": to_jsonable(self.computed),
                "note": self.note}


def _fact(k: int) -> int:
    return math.factorial(k)


# -- expansion of the ordering sum ---------------------------------------

def displayed_phi_orders(x) -> list:
    """Two leading coefficients of the ordering sum, as the displayed double sum gives them."""
    c0, c1 = Fraction(0), Fraction(0)
    for sigma in permutations(x):
        prefix, sums = 0, []
        for v in sigma:
            prefix += v
            sums.append(prefix)
        p = math.prod(sums)
        c0 += Fraction(1, p)
        c1 -= Fraction(1, 2) * Fraction(sum(sums), p)
    return [c0, c1]


def phi_expansion_claims(max_sum: int = 7) -> list:
    claimed, computed = {}, {}
    for s in range(1, max_sum + 1):
        for x in enumerate_partitions(s):
            key = ",".join(map(str, x))
            claimed[key] = displayed_phi_orders(x)
            computed[key] = phi_series(EPRIME, x, 1).coefficients(-len(x), 2 - len(x))
    records = [ClaimRecord(f"phi-expansion-two-orders-sum-le-{max_sum}", claimed, computed,
                           "leading two epsilon coefficients of the E' ordering sum, every x")]
    for d in range(1, max_sum + 1):
        s = phi_series(EPRIME, [1] * d, 1)
        records.append(ClaimRecord(f"phi-all-ones-d{d}", [Fraction(1), Fraction(-d * (d + 1), 4)],
                                   s.coefficients(-d, 2 - d)))
    for d in range(2, max_sum + 1):
        s = phi_series(EPRIME, [2] + [1] * (d - 2), 0)
        records.append(ClaimRecord(f"phi-two-then-ones-d{d}", Fraction(1, 2), s.coeff(1 - d)))
    return records


# -- weights, partition functions, weighted Hurwitz numbers ---------------

def _stated_weight_orders(model: WeightModel, lam: Partition) -> list:
    a, b, d, ell = w0(lam), w1(lam), lam.weight, len(lam)
    if model.kind == "eprime":
        return [a, b]
    if model.kind == "e":
        return [a, b - d * a]
    return [a, b - Fraction(ell * (ell + 1), 2) * d * a]


def weight_expansion_claims(d_max: int) -> list:
    records = []
    for model in MODELS:
        for d in range(1, d_max + 1):
            for lam in enumerate_partitions(d):
                s = weight_series(model, lam, 1)
                records.append(ClaimRecord(
                    f"weight-expansion-{model.kind}-{','.join(map(str, lam))}",
                    _stated_weight_orders(model, lam), s.coefficients(-len(lam), 2 - len(lam)),
                    "stated as the constant and linear terms of the rescaled weight; "
                    "computed values are the two leading Laurent coefficients of w(lambda)"))
    return records


def _stated_pf(model: WeightModel, d: int) -> list:
    lead = Fraction(1, _fact(d))
    if model.kind == "eprime":
        return [lead, Fraction(3 - d, 4 * _fact(d - 1))]
    if model.kind == "e":
        return [lead, Fraction(5 + d, 4 * _fact(d - 1))]
    return [lead, Fraction(d + 1, _fact(d - 1))]


def partition_function_claims(d_max: int) -> list:
    return [ClaimRecord(f"pf-expansion-d{d}-{model.kind}", _stated_pf(model, d),
                        partition_function_series(model, d, 1).coefficients(0, 2))
            for model in MODELS for d in range(1, d_max + 1)]


def _stated_gamma2(model: WeightModel, d: int) -> Fraction:
    if model.kind == "eprime":
        return Fraction(-(d + 1), 4 * _fact(d - 1))
    if model.kind == "e":
        return Fraction(-(3 - d), 4 * _fact(d - 1))
    return Fraction(d + 1, 2 * _fact(d - 1))


def weighted_hurwitz_claims(d_max: int) -> list:
    records = []
    for model in MODELS:
        for d in range(1, d_max + 1):
            n = max(2 * d, 4)
            two = special_partition(2, 1, n)
            three = special_partition(3, 1, n)
            two_two = special_partition(2, 2, n)
            comb = hurwitz_series_combination(model, n, d, 1)
            simple = tuple([two] * d)
            zero = [Fraction(0), Fraction(0)]
            records.append(ClaimRecord(f"wh-leading-d{d}-{model.kind}", Fraction(1, _fact(d)),
                                       comb.get(simple, zero)[0]))
            records.append(ClaimRecord(f"wh-gamma2-d{d}-{model.kind}", _stated_gamma2(model, d),
                                       comb.get(simple, zero)[1]))
            if d >= 2:
                rest = [two] * (d - 2)
                k3 = tuple(sorted([three] + rest, reverse=True))
                k22 = tuple(sorted([two_two] + rest, reverse=True))
                g1 = Fraction(1, _fact(d - 1))
                records.append(ClaimRecord(
                    f"wh-gamma1-d{d}-{model.kind}", [g1, g1],
                    [comb.get(k3, zero)[1], comb.get(k22, zero)[1]],
                    "compared on the colength-d collections (3-cycle or double transposition "
                    "plus d-2 transpositions)"))
            records.append(ClaimRecord(
                f"wh-basis-d{d}-{model.kind}", "simple, 3-cycle and double-transposition collections only",
                "simple, 3-cycle and double-transposition collections only"
                if set(comb) <= {simple} | ({tuple(sorted([three] + [two] * (d - 2), reverse=True)),
                                             tuple(sorted([two_two] + [two] * (d - 2), reverse=True))}
                                            if d >= 2 else set())
                else f"other collections: {sorted(map(str, comb))}"))
    return records


def near_simple_aut_claims(d_max: int) -> list:
    return [ClaimRecord(f"aut-near-simple-profile-d{d}", _fact(d - 1),
                        aut_order([2] + [1] * (d - 2)),
                        "automorphism order of the colength profile (2, 1^(d-2))")
            for d in range(2, d_max + 1)]


def classical_limit_claims(d_max: int) -> list:
    records = []
    for model in MODELS:
        for d in range(1, min(d_max, 4) + 1):
            z = partition_function_series(model, d, 1)
            ratios = {}
            for lam in enumerate_partitions(d):
                s = scaled_weight_series(model, lam, d, 1) * profile_multiplicity(lam)
                ratios[",".join(map(str, lam))] = (s / z).coeff(0)
            target = ",".join(["1"] * d)
            claimed = {k: Fraction(1 if k == target else 0) for k in ratios}
            records.append(ClaimRecord(f"dirac-limit-{model.kind}-d{d}", claimed, ratios,
                                       "constant terms of the profile masses as epsilon -> 0"))
    # classical limit of weighted Hurwitz numbers at n = 4, d = 2
    two = special_partition(2, 1, 4)
    for model in MODELS:
        claimed, computed = {}, {}
        comb = hurwitz_series_combination(model, 4, 2, 0)
        for mu in enumerate_partitions(4):
            for nu in enumerate_partitions(4):
                key = f"{','.join(map(str, mu))}|{','.join(map(str, nu))}"
                claimed[key] = Fraction(1, 2) * hurwitz_number([two, two, mu, nu], 4)
                computed[key] = sum((c[0] * hurwitz_number(list(k) + [mu, nu], 4) for k, c in comb.items()),
                                    Fraction(0))
        records.append(ClaimRecord(f"wh-classical-limit-{model.kind}-n4-d2", claimed, computed))
    return records


# -- generating functions -------------------------------------------------

def _poch(q: Fraction, k: int) -> Fraction:
    return math.prod((1 - q ** j for j in range(1, k + 1)), start=Fraction(1))


def generating_function_claims(q=Fraction(1, 2), top: int = 4) -> list:
    q = Fraction(q)
    idx = range(1, top + 1)
    eprime = weight_gen_series(WeightModel("eprime"), q, top + 1)
    e = weight_gen_series(WeightModel("e"), q, top + 1)
    h = weight_gen_series(WeightModel("h"), q, top + 1)
    records = [
        ClaimRecord("genfun-Eprime-product-form", [q ** (i * (i + 1) // 2) / _poch(q, i) for i in idx],
                    [eprime.coeff(i) for i in idx], f"coefficients 1..{top} at q={q}"),
        ClaimRecord("genfun-Eprime-pochhammer-form", [q ** (i * (i + 1) // 2) / _poch(q, i - 1) for i in idx],
                    [eprime.coeff(i) for i in idx], "denominator written with subscript i-1"),
        ClaimRecord("genfun-E-coefficients", [q ** (i * (i - 1) // 2) / _poch(q, i - 1) for i in idx],
                    [e.coeff(i) for i in idx], "denominator written with subscript i-1"),
        ClaimRecord("genfun-H-coefficients", [1 / _poch(q, i - 1) for i in idx],
                    [h.coeff(i) for i in idx], "denominator written with subscript i-1"),
        ClaimRecord("genfun-E-as-shifted-pochhammer", [eprime.coeff(i) for i in idx],
                    [e.coeff(i) for i in idx],
                    "(-qz;q)_inf expands to the E' product, not the E product"),
        ClaimRecord("genfun-H-as-inverse-pochhammer", [e.invert().coeff(i) for i in idx],
                    [h.coeff(i) for i in idx],
                    "1/(-z;q)_inf is the inverse of E, not the H product"),
        ClaimRecord("genfun-Eprime-2-closed-form", closed_form_coefficient(WeightModel("eprime"), 2, q),
                    eprime.coeff(2)),
    ]
    order = 9
    li = dilog_series(q, order)
    exp_neg = (-li.scale_variable(-1)).exp()
    one_plus_z = TruncatedSeries.from_coeffs("z", [1, 1], order)
    records += [
        ClaimRecord("dilog-Eprime", exp_neg, one_plus_z * weight_gen_series(WeightModel("eprime"), q, order)),
        ClaimRecord("dilog-E", exp_neg, weight_gen_series(WeightModel("e"), q, order)),
        ClaimRecord("dilog-H", li.exp(), weight_gen_series(WeightModel("h"), q, order)),
        dilog_limit_check(4),
    ]
    return records


def dilog_limit_check(order: int = 4) -> ClaimRecord:
    """The z^k coefficient of the rescaled dilogarithm tends to 1 for k = 1 and 0 for k >= 2."""
    claimed, computed = {}, {}
    for k in range(1, order + 1):
        s = dilog_coefficient_series(k, 2)
        claimed[str(k)] = Fraction(1 if k == 1 else 0)
        computed[str(k)] = s.coeff(0)
    return ClaimRecord("dilog-classical-limit", claimed, computed,
                       "constant term in epsilon of [z^k] Li2(exp(-epsilon), epsilon z)")


def classical_content_claims(n_max: int = 6, order: int = 4) -> ClaimRecord:
    claimed, computed = {}, {}
    for n in range(1, n_max + 1):
        for lam in enumerate_partitions(n):
            key = ",".join(map(str, lam))
            claimed[key] = classical_content_product(lam, order)
            computed[key] = content_product(WeightModel("exp"), lam, None, order).series
    return ClaimRecord("classical-content-product", claimed, computed)


# -- measures ---------------------------------------------------------------

def measure_claims(d_max: int) -> list:
    records = []
    claimed, computed = [], []
    for n in range(1, 25):
        for ell in range(1, n // 2 + 1):
            claimed.append(partition_count(ell))
            computed.append(count_partitions_with_length(n, n - ell))
    records.append(ClaimRecord("count-colengths-n-le-24", claimed, computed))
    for d in range(1, d_max + 1):
        n = 2 * d
        lams = enumerate_partitions(d)
        records.append(ClaimRecord(
            f"fiber-cardinality-ordered-tuples-d{d}",
            [fiber_size(n, lam) for lam in lams], [ordered_tuple_count(n, lam) for lam in lams],
            f"fiber sizes over each colength profile at n={n}; computed counts ordered tuples"))
        records.append(ClaimRecord(
            f"fiber-cardinality-slot-assignments-d{d}",
            [fiber_size(n, lam) for lam in lams],
            [sum(1 for l2, _ in enumerate_configs(n, d) if l2 == lam) for lam in lams]))
    q = Fraction(1, 2)
    for model in MODELS:
        for d in range(1, min(d_max, 4) + 1):
            z = partition_function(model, d, q)
            records.append(ClaimRecord(
                f"n-independence-{model.kind}-d{d}", [z] * 3,
                [config_partition_function(model, n, d, q) for n in (2 * d, 2 * d + 1, 2 * d + 2)],
                "configuration-space partition function at q=1/2 for n = 2d, 2d+1, 2d+2"))
    for d in range(1, d_max + 1):
        lams = enumerate_partitions(d)
        target = Partition([2] + [1] * (d - 2)) if d >= 2 else None
        records.append(ClaimRecord(
            f"classical-monomial-limit-d{d}",
            [Fraction(1 if lam == target else 0) for lam in lams],
            [classical_weight(lam) for lam in lams],
            "limit of m_lambda at k equal arguments 1/k, over lambda |- d"))
    records.append(ClaimRecord(
        "special-partition-weight", [32, 21],
        [special_partition(5, 3, 20).weight, special_partition(2, 1, 20).weight],
        "weights of the literal notation (1^(n-m), l^m) at l=5, m=3, n=20 and of (1^(n-1), 2) "
        "at n=20, against the weight-n partitions actually used"))
    return records


def tau_identity_claims() -> list:
    cases_total, cases_equal = 0, 0
    for n in (2, 3, 4):
        for q in (Fraction(1, 2), Fraction(1, 3)):
            for model in MODELS:
                cases = verify_generating_identity(model, n, q, d_max=3)
                cases_total += len(cases)
                cases_equal += sum(c.equal for c in cases)
    return [ClaimRecord("tau-generating-identity", cases_total, cases_equal,
                        "cases with equal tau coefficient and weighted Hurwitz number, n <= 4, d <= 3")]


def claims_report(d_max: int = 5) -> list:
    if not 1 <= d_max <= 6:
        raise ValueError("d_max must lie in 1..6")
    return (phi_expansion_claims()
            + weight_expansion_claims(d_max)
            + partition_function_claims(d_max)
            + weighted_hurwitz_claims(d_max)
            + near_simple_aut_claims(d_max)
            + classical_limit_claims(d_max)
            + generating_function_claims()
            + [classical_content_claims()]
            + measure_claims(d_max)
            + tau_identity_claims())


def render_markdown(records: list) -> str:
    lines = ["| id | status | claimed | computed |", "|---|---|---|---|"]

    def short(v):
        text = str(to_jsonable(v))
        return text if len(text) <= 80 else text[:77] + "..."

    for r in records:
        lines.append(f"| {r.claim_id} | {r.status} | {short(r.claimed)} | {short(r.computed)} |")
    return "\n".join(lines) + "\n"
