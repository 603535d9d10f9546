from fractions import Fraction

import pytest

from qhurwitz.claims import CONFIRMED, DISCREPANT, ClaimRecord, claims_report, dilog_limit_check

F = Fraction


@pytest.fixture(scope="module")
def report():
    return {r.claim_id: r for r in claims_report(5)}


def test_status_is_equality():
    assert ClaimRecord("a", F(1, 2), F(1, 2)).status == CONFIRMED
    assert ClaimRecord("b", F(1, 2), F(1, 3)).status == DISCREPANT


def test_ids_unique():
    records = claims_report(5)
    assert len({r.claim_id for r in records}) == len(records)


def test_both_statuses_present(report):
    statuses = {r.status for r in report.values()}
    assert statuses == {CONFIRMED, DISCREPANT}


def test_expected_verdicts(report):
    confirmed = [
        "phi-expansion-two-orders-sum-le-7",
        "pf-expansion-d2-eprime",
        "genfun-Eprime-product-form",
        "genfun-Eprime-2-closed-form",
        "dilog-Eprime", "dilog-E", "dilog-H",
        "dilog-classical-limit",
        "count-colengths-n-le-24",
        "classical-content-product",
        "tau-generating-identity",
        "wh-classical-limit-h-n4-d2",
    ]
    discrepant = [
        "pf-expansion-d3-eprime",
        "pf-expansion-d2-e",
        "pf-expansion-d2-h",
        "genfun-E-coefficients",
        "genfun-H-coefficients",
        "genfun-Eprime-pochhammer-form",
        "special-partition-weight",
        "aut-near-simple-profile-d3",
        "fiber-cardinality-ordered-tuples-d3",
        "wh-gamma1-d2-eprime",
    ]
    for cid in confirmed:
        assert report[cid].status == CONFIRMED, cid
    for cid in discrepant:
        assert report[cid].status == DISCREPANT, cid


def test_pf_d3_values(report):
    r = report["pf-expansion-d3-eprime"]
    assert r.claimed == [F(1, 6), F(0)]
    assert r.computed == [F(1, 6), F(1, 2)]


def test_dilog_limit_check():
    assert dilog_limit_check(5).status == CONFIRMED


def test_dmax_range():
    with pytest.raises(ValueError):
        claims_report(7)


def test_json_serializable(report):
    import json
    json.dumps([r.to_json() for r in report.values()])
