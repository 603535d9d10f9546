"""Named verification sweeps behind ``qhurwitz suite``.

Each suite is a list of named checks.  A check returns ``(passed, detail)``;
``detail`` is a short deterministic string (no timings).
"""

from __future__ import annotations

import itertools
import math
import time
from fractions import Fraction
from typing import Callable, Optional

from .algebra import exp_monomial
from .characters import character, dimension
from .claims import (CONFIRMED, DISCREPANT, classical_content_claims, classical_limit_claims,
                     claims_report, dilog_limit_check, measure_claims, phi_expansion_claims)
from .hurwitz import hurwitz_number, hurwitz_number_oracle
from .measures import DEFAULT_CONVENTION, measure_theta, measure_xi, lambda_map, tv_distance_to_dirac
from .partitions import Partition, aut_order, enumerate_partitions, z_order
from .semiclassics import (partition_function_series, partition_function_series_via_q,
                           weight_series, w0, w1)
from .tau import (adjudicate_convention, content_product, dilog_identities, identity_suite,
                  tau_coefficient, verify_generating_identity, weight_gen_series)
from .weights import E, EPRIME, H, WeightModel

SUITES = ("full", "lemma", "tau", "limits", "claims")
EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_BUDGET = 0, 1, 2, 3
TV_QS = (Fraction(1, 2), Fraction(3, 4), Fraction(7, 8), Fraction(15, 16))


# -- characters and Hurwitz numbers --------------------------------------

def check_orthogonality(n_max: int = 8):
    for n in range(1, n_max + 1):
        parts = enumerate_partitions(n)
        if sum(dimension(lam) ** 2 for lam in parts) != math.factorial(n):
            return False, f"sum of squared dimensions fails at n={n}"
        for mu in parts:
            for nu in parts:
                s = sum(character(lam, mu) * character(lam, nu) for lam in parts)
                if s != (z_order(mu) if mu == nu else 0):
                    return False, f"column orthogonality fails at {tuple(mu)}, {tuple(nu)}"
    return True, f"n <= {n_max}"


def check_hurwitz_oracle(n_max: int = 5, k_max: int = 3):
    count = 0
    for n in range(1, n_max + 1):
        parts = enumerate_partitions(n)
        for k in range(1, k_max + 1):
            for profiles in itertools.product(parts, repeat=k):
                if hurwitz_number(profiles, n) != hurwitz_number_oracle(profiles, n):
                    return False, f"mismatch at {[tuple(p) for p in profiles]}"
                count += 1
    return True, f"{count} profile lists, n <= {n_max}, k <= {k_max}"


# -- expansions ------------------------------------------------------------

def _all_confirmed(records):
    bad = [r.claim_id for r in records if r.status != CONFIRMED]
    return not bad, f"records: {len(records)}" if not bad else f"not confirmed: {', '.join(bad)}"


def check_phi_lemma():
    return _all_confirmed(phi_expansion_claims(7))


def check_weight_leading_orders(d_max: int = 6):
    for d in range(1, d_max + 1):
        for lam in enumerate_partitions(d):
            s = weight_series(EPRIME, lam, 1)
            aut = aut_order(lam)
            if s.coefficients(-len(lam), 2 - len(lam)) != [w0(lam) / aut, -w1(lam) / aut]:
                return False, f"E' weight expansion differs at {tuple(lam)}"
    return True, f"d <= {d_max}"


def check_e_transfer(d_max: int = 6, order: int = 2):
    for d in range(1, d_max + 1):
        for lam in enumerate_partitions(d):
            lhs = weight_series(E, lam, order)
            rhs = (exp_monomial(d, order + 1) * weight_series(EPRIME, lam, order)).truncate(lhs.order)
            if lhs != rhs:
                return False, f"E/E' transfer fails at {tuple(lam)}"
    return True, f"d <= {d_max}"


def check_two_paths(d_max: int = 4, order: int = 2):
    for model in (EPRIME, E, H):
        for d in range(1, d_max + 1):
            if partition_function_series(model, d, order) != partition_function_series_via_q(model, d, order):
                return False, f"paths disagree for {model.kind}, d={d}"
    return True, f"eprime, e, h; d <= {d_max}"


# -- tau function ------------------------------------------------------------

def check_identity_suite():
    total = 0
    for model, n, q, degrees in identity_suite():
        for case in verify_generating_identity(model, n, q, degrees=degrees):
            total += 1
            if not case.equal:
                return False, (f"{model.label} n={n} q={q} d={case.d} "
                               f"mu={tuple(case.mu)} nu={tuple(case.nu)}: {case.tau} != {case.hurwitz}")
    return True, f"{total} cases under {DEFAULT_CONVENTION}"


def check_adjudication():
    result = adjudicate_convention()
    ok = result["chosen"] == DEFAULT_CONVENTION
    failures = ", ".join(f"{k}={v}" for k, v in result["failures"].items())
    return ok, f"chosen {result['chosen']}; failures {failures}"


def check_dilog():
    for q in (Fraction(1, 2), Fraction(1, 3)):
        for name, ok in dilog_identities(q, 9).items():
            if not ok:
                return False, f"{name} fails at q={q}"
    e2 = weight_gen_series(EPRIME, Fraction(1, 2), 3).coeff(2)
    if e2 != Fraction(1, 3):
        return False, f"E'_2(1/2) = {e2}"
    return True, "q in {1/2, 1/3}, through z^8"


def check_content_products(n_max: int = 6, order: int = 4):
    ok, detail = _all_confirmed([classical_content_claims(n_max, order)])
    if not ok:
        return ok, detail
    c = (Fraction(1), Fraction(1, 2))
    for n in range(1, n_max + 1):
        for lam in enumerate_partitions(n):
            a = content_product(WeightModel.product(c), lam, None, order).series
            b = content_product(WeightModel.product([-x for x in c]), lam.conjugate(), None, order).series
            if a != b:
                return False, f"conjugation fails at {tuple(lam)}"
    return True, f"n <= {n_max}"


def check_d0_reduction(n_max: int = 5):
    for n in range(1, n_max + 1):
        parts = enumerate_partitions(n)
        for mu in parts:
            for nu in parts:
                want = Fraction(1, z_order(mu)) if mu == nu else Fraction(0)
                if tau_coefficient(EPRIME, mu, nu, 0, Fraction(1, 2)) != want:
                    return False, f"d=0 fails at {tuple(mu)}, {tuple(nu)}"
    return True, f"n <= {n_max}"


# -- limits and measures ------------------------------------------------------

def check_dirac_series():
    records = [r for r in classical_limit_claims(4) if r.claim_id.startswith("dirac-limit")]
    return _all_confirmed(records)


def check_tv_decreasing(d_max: int = 4):
    for model in (EPRIME, E):
        for d in range(1, d_max + 1):
            target = Partition([1] * d)
            tvs = [tv_distance_to_dirac(measure_xi(model, d, q), target) for q in TV_QS]
            if d > 1 and not all(a > b for a, b in zip(tvs, tvs[1:])):
                return False, f"{model.kind} d={d}: {[str(t) for t in tvs]}"
    return True, f"eprime, e; d <= {d_max}; q in {', '.join(map(str, TV_QS))}"


def check_weighted_hurwitz_limit():
    records = [r for r in classical_limit_claims(2) if r.claim_id.startswith("wh-classical-limit")]
    return _all_confirmed(records)


def check_dilog_limit():
    return _all_confirmed([dilog_limit_check(6)])


def check_measure_claims():
    records = [r for r in measure_claims(4)
               if r.claim_id.startswith(("count-colengths", "n-independence", "fiber-cardinality-slot"))]
    return _all_confirmed(records)


def check_xi_n_independence(d_max: int = 4):
    q = Fraction(1, 2)
    for model in (EPRIME, E, H):
        for d in range(1, d_max + 1):
            try:
                xi = measure_xi(model, d, q).as_dict()
            except ArithmeticError:
                continue
            for n in (2 * d, 2 * d + 1, 2 * d + 2):
                pushed = measure_theta(model, n, d, q).pushforward(lambda_map).as_dict()
                if pushed != xi:
                    return False, f"{model.kind} d={d} n={n}"
    return True, f"d <= {d_max}, n in 2d..2d+2"


def check_theta_table():
    theta = measure_theta(EPRIME, 4, 2, Fraction(1, 2))
    masses = [m for _, m in theta.support]
    pushed = theta.pushforward(lambda_map).as_dict()
    want = {Partition([2]): Fraction(2, 3), Partition([1, 1]): Fraction(1, 3)}
    ok = masses == [Fraction(1, 3)] * 3 and pushed == want
    return ok, f"masses {[str(m) for m in masses]}"


def check_claims_mix(d_max: int = 5):
    records = claims_report(d_max)
    statuses = {r.status for r in records}
    n_conf = sum(r.status == CONFIRMED for r in records)
    return statuses == {CONFIRMED, DISCREPANT}, f"{n_conf} confirmed, {len(records) - n_conf} discrepant"


LEMMA = [
    ("phi-expansion", check_phi_lemma),
    ("weight-leading-orders", check_weight_leading_orders),
    ("e-eprime-transfer", check_e_transfer),
    ("partition-function-two-paths", check_two_paths),
]
TAU = [
    ("generating-identity", check_identity_suite),
    ("convention-adjudication", check_adjudication),
    ("dilogarithm-identities", check_dilog),
    ("content-products", check_content_products),
    ("degree-zero-reduction", check_d0_reduction),
]
LIMITS = [
    ("dirac-limit-series", check_dirac_series),
    ("tv-distance-decreasing", check_tv_decreasing),
    ("weighted-hurwitz-classical-limit", check_weighted_hurwitz_limit),
    ("dilogarithm-classical-limit", check_dilog_limit),
    ("measure-counts", check_measure_claims),
    ("xi-n-independence", check_xi_n_independence),
    ("theta-table", check_theta_table),
]
CLAIMS = [("claims-mix", check_claims_mix)]
FULL = [("character-orthogonality", check_orthogonality),
        ("hurwitz-oracle", check_hurwitz_oracle)] + LEMMA + TAU + LIMITS + CLAIMS

_REGISTRY = {"full": FULL, "lemma": LEMMA, "tau": TAU, "limits": LIMITS, "claims": CLAIMS}


def run_suite(name: str, budget: Optional[float] = None, clock: Callable[[], float] = time.monotonic):
    """Run a suite; returns ``(exit_code, report)``.

    The budget is checked between checks, so a single long check can overrun it.
    """
    if name not in _REGISTRY:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    start = clock()
    results = []
    code = EXIT_OK
    for check_name, fn in _REGISTRY[name]:
        if budget is not None and clock() - start > budget:
            code = EXIT_BUDGET
            break
        passed, detail = fn()
        results.append({"check": check_name, "passed": bool(passed), "detail": detail})
        if not passed:
            code = EXIT_FAILED
    status = {EXIT_OK: "ok", EXIT_FAILED: "failed", EXIT_BUDGET: "budget-exceeded"}[code]
    report = {"schema": 1, "suite": name, "status": status, "checks": results}
    if name in ("claims", "full"):
        report["claims"] = [r.to_json() for r in claims_report(5)]
    return code, report


def render_conventions_doc() -> str:
    """Markdown recording the conventions fixed by verification, regenerated from code."""
    result = adjudicate_convention()
    failures = "\n".join(f"| {k} | {v} |" for k, v in result["failures"].items())
    return f"""# Conventions

This file is generated by `qhurwitz.suites.render_conventions_doc()`; a test
checks that it is current.

## Counting branch collections in weighted Hurwitz numbers

A configuration of degree `d` is a colength profile `lambda` of `d` together
with one partition of `n` of colength `lambda_j` for each part (a slot
assignment).  Two ways of summing are implemented:

* `slots`: every slot assignment counts, so an unordered collection whose
  colength profile is `lambda` carries multiplicity `|aut(lambda)| / |aut(collection)|`;
* `multiset`: each unordered collection counts once.

The default is the unique convention under which tau-function coefficients
equal weighted Hurwitz numbers on the identity suite (n in 2..4, d <= 3) and
the degree-4 adjudication cases.  Failing cases per convention:

| convention | failing cases |
|---|---|
{failures}

Default: **{result["chosen"]}**.

## Expansion orders

Series returned by `semiclassics` carry explicit leading exponents; an
`order` argument counts coefficients beyond the leading one.

## Signs

Weights of the `h` and inverse-product models carry the sign
`(-1)^(d - len(lambda))`, so their measures are signed.  Total variation is
reported alongside every measure.
"""
