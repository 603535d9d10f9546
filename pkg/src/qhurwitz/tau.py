"""Weight generating functions, content products and the tau-function identity.

The hypergeometric tau function ``sum_lambda r_lambda s_lambda(t) s_lambda(s)``
has ``p_mu(t) p_nu(s)`` coefficient
``sum_lambda r_lambda chi_lambda(mu) chi_lambda(nu) / (z_mu z_nu)``; its
``beta**d`` part must equal the weighted Hurwitz number of degree ``d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import TruncatedSeries
from .characters import character
from .measures import CONVENTIONS, DEFAULT_CONVENTION, weighted_hurwitz
from .partitions import Partition, enumerate_partitions, z_order
from .weights import WeightModel, check_q


def weight_gen_series(model: WeightModel, q=None, order: int = 4) -> TruncatedSeries:
    """Coefficients of ``G(z)`` up to ``z**(order-1)``, exactly.

    The infinite products satisfy functional equations in ``z -> q z``
    (``E'(z) = (1 + q z) E'(q z)``, ``E(z) = (1 + z) E(q z)``,
    ``H(z) (1 - z) = H(q z)``), which give each coefficient from the previous
    one with no truncation of the product.
    """
    g = [Fraction(1)]
    if model.kind == "exp":
        g = [Fraction(1, math.factorial(i)) for i in range(order)]
    elif model.kind == "product":
        for c in model.c:
            g = [a + (c * g[i - 1] if i else 0) for i, a in enumerate(g + [Fraction(0)])]
    elif model.kind == "inverse-product":
        g = [Fraction(1)] + [Fraction(0)] * (order - 1)
        for c in model.c:
            for i in range(1, order):
                g[i] += c * g[i - 1]
    else:
        q = check_q(q)
        for i in range(1, order):
            if model.kind == "eprime":
                g.append(q ** i * g[-1] / (1 - q ** i))
            elif model.kind == "e":
                g.append(q ** (i - 1) * g[-1] / (1 - q ** i))
            else:
                g.append(g[-1] / (1 - q ** i))
    return TruncatedSeries.from_coeffs("z", g, order)


def closed_form_coefficient(model: WeightModel, i: int, q) -> Fraction:
    """``E'_i = q^(i(i+1)/2)/(q;q)_i``, ``E_i = q^(i(i-1)/2)/(q;q)_i``, ``H_i = 1/(q;q)_i``."""
    q = check_q(q)
    poch = math.prod((1 - q ** j for j in range(1, i + 1)), start=Fraction(1))
    if model.kind == "eprime":
        return q ** (i * (i + 1) // 2) / poch
    if model.kind == "e":
        return q ** (i * (i - 1) // 2) / poch
    if model.kind == "h":
        return 1 / poch
    raise ValueError(f"no closed form for {model.kind!r}")


@dataclass(frozen=True)
class ContentProduct:
    lam: Partition
    model: WeightModel
    q: Optional[Fraction]
    series: TruncatedSeries

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "model": self.model.to_json(),
            "q": None if self.q is None else str(self.q),
            "series": self.series.to_json(),
        }


def content_product(model: WeightModel, lam, q=None, order: int = 4) -> ContentProduct:
    """``prod over boxes of G(beta * content)`` as a beta-series."""
    if order < 1:
        raise ValueError("order must be at least 1")
    lam = Partition(lam)
    g = weight_gen_series(model, q, order).rename("beta")
    out = TruncatedSeries.constant("beta", 1, order)
    for content in lam.contents():
        if content:
            out = out * g.scale_variable(content)
    return ContentProduct(lam, model, None if q is None else Fraction(q), out)


def classical_content_product(lam, order: int) -> TruncatedSeries:
    """``exp((beta/2) sum_i lambda_i (lambda_i - 2i + 1))``."""
    lam = Partition(lam)
    s = Fraction(sum(p * (p - 2 * i + 1) for i, p in enumerate(lam, start=1)), 2)
    return TruncatedSeries.from_coeffs("beta", [s ** k / math.factorial(k) for k in range(order)], order)


def tau_coefficient(model: WeightModel, mu, nu, d: int, q=None) -> Fraction:
    mu, nu = Partition(mu), Partition(nu)
    if mu.weight != nu.weight:
        raise ValueError(f"weight mismatch: |{tuple(mu)}| != |{tuple(nu)}|")
    total = Fraction(0)
    for lam in enumerate_partitions(mu.weight):
        chi = character(lam, mu) * character(lam, nu)
        if chi == 0:
            continue
        r = content_product(model, lam, q, d + 1).series.coeff(d)
        total += r * chi
    return total / (z_order(mu) * z_order(nu))


@dataclass(frozen=True)
class IdentityCase:
    mu: Partition
    nu: Partition
    d: int
    tau: Fraction
    hurwitz: Fraction

    @property
    def equal(self) -> bool:
        return self.tau == self.hurwitz

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "nu": list(self.nu), "d": self.d,
                "tau": str(self.tau), "hurwitz": str(self.hurwitz), "equal": self.equal}


def verify_generating_identity(model: WeightModel, n: int, q=None, d_max: int = 3,
                               convention: str = DEFAULT_CONVENTION,
                               degrees: Optional[Sequence[int]] = None) -> list:
    """Compare both sides for every ``mu, nu |- n`` and ``d <= d_max``."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    parts = enumerate_partitions(n)
    cases = []
    for d in (degrees if degrees is not None else range(d_max + 1)):
        for mu in parts:
            for nu in parts:
                cases.append(IdentityCase(mu, nu, d, tau_coefficient(model, mu, nu, d, q),
                                          weighted_hurwitz(model, mu, nu, d, q, convention)))
    return cases


def identity_suite() -> list:
    """``(model, n, q, degrees)`` sweeps run by the identity verification."""
    out = []
    for n in (2, 3, 4):
        for q in (Fraction(1, 2), Fraction(1, 3)):
            for kind in ("eprime", "e", "h"):
                out.append((WeightModel(kind), n, q, range(4)))
        for c in ((1,), (1, Fraction(1, 2))):
            out.append((WeightModel.product(c), n, None, range(4)))
            out.append((WeightModel.inverse_product(c), n, None, range(4)))
        out.append((WeightModel("exp"), n, None, range(4)))
    return out


def adjudication_suite() -> list:
    """Degree-4 cases where a colength profile repeats a part with several partition choices."""
    out = []
    for n in (4, 5):
        for kind in ("eprime", "e", "h"):
            out.append((WeightModel(kind), n, Fraction(1, 2), (4,)))
        out.append((WeightModel.product((1, Fraction(1, 2))), n, None, (4,)))
    return out


def adjudicate_convention() -> dict:
    """Run both conventions over the identity and adjudication suites.

    Returns failure counts per convention and the unique passing one
    (``None`` if zero or both pass).
    """
    failures = {}
    for convention in CONVENTIONS:
        bad = 0
        for model, n, q, degrees in identity_suite() + adjudication_suite():
            cases = verify_generating_identity(model, n, q, convention=convention, degrees=degrees)
            bad += sum(not c.equal for c in cases)
        failures[convention] = bad
    passing = [c for c, bad in failures.items() if bad == 0]
    return {"failures": failures, "chosen": passing[0] if len(passing) == 1 else None}


def dilog_series(q, order: int) -> TruncatedSeries:
    """``Li_2(q, z) = sum_{k>=1} z^k / (k (1 - q^k))``."""
    q = check_q(q)
    return TruncatedSeries.from_coeffs(
        "z", [0] + [1 / (k * (1 - q ** k)) for k in range(1, order)], order)


def dilog_identities(q, order: int) -> dict:
    """Check the exponential relations between the product families and ``Li_2``."""
    li = dilog_series(q, order)
    li_neg = li.scale_variable(-1)
    one_plus_z = TruncatedSeries.from_coeffs("z", [1, 1], order)
    eprime = weight_gen_series(WeightModel("eprime"), q, order)
    e = weight_gen_series(WeightModel("e"), q, order)
    h = weight_gen_series(WeightModel("h"), q, order)
    exp_neg = (-li_neg).exp()
    return {
        "(1+z)E' = exp(-Li2(q,-z))": (one_plus_z * eprime).agrees_with(exp_neg),
        "E = exp(-Li2(q,-z))": e.agrees_with(exp_neg),
        "E = (1+z)E'": e.agrees_with(one_plus_z * eprime),
        "H exp(-Li2(q,z)) = 1": (h * (-li).exp()).agrees_with(TruncatedSeries.constant("z", 1, order)),
    }
