import math
from fractions import Fraction

import pytest

from qhurwitz.algebra import TruncatedSeries
from qhurwitz.partitions import Partition, enumerate_partitions, z_order
from qhurwitz.tau import (adjudicate_convention, classical_content_product, closed_form_coefficient,
                          content_product, dilog_identities, dilog_series, tau_coefficient,
                          verify_generating_identity, weight_gen_series)
from qhurwitz.weights import E, EPRIME, EXP, H, WeightModel

F = Fraction
HALF = F(1, 2)


def z(coeffs, order):
    return TruncatedSeries.from_coeffs("z", coeffs, order)


def truncated_product(q, K, order, shift):
    """prod_{i=shift}^{K} (1 + q^i z), truncated: a direct finite-product oracle."""
    out = z([1], order)
    for i in range(shift, K + 1):
        out = out * z([1, q ** i], order)
    return out


def test_generating_series_examples():
    assert weight_gen_series(EPRIME, HALF, 3) == z([1, 1, F(1, 3)], 3)
    assert weight_gen_series(EXP, None, 4) == z([1, 1, F(1, 2), F(1, 6)], 4)
    assert weight_gen_series(H, HALF, 2) == z([1, 2], 2)


def test_generating_series_against_finite_products():
    # truncating the infinite product at K leaves an error of order q^K per coefficient
    q = HALF
    exact = weight_gen_series(EPRIME, q, 4)
    errs = []
    for K in (10, 20, 30):
        approx = truncated_product(q, K, 4, 1)
        errs.append(max(abs(approx.coeff(i) - exact.coeff(i)) for i in range(4)))
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < F(1, 2 ** 28)
    h_exact = weight_gen_series(H, q, 4)
    h_approx = truncated_product(q, 30, 4, 0).scale_variable(-1).invert()
    assert max(abs(h_approx.coeff(i) - h_exact.coeff(i)) for i in range(4)) < F(1, 2 ** 27)


def test_closed_forms():
    for q in (HALF, F(1, 3)):
        for model in (EPRIME, E, H):
            g = weight_gen_series(model, q, 6)
            assert [g.coeff(i) for i in range(6)] == [closed_form_coefficient(model, i, q) for i in range(6)]
    assert closed_form_coefficient(EPRIME, 2, HALF) == F(1, 3)


def test_e_is_one_plus_z_times_eprime():
    for q in (HALF, F(1, 3)):
        one_plus_z = z([1, 1], 9)
        assert weight_gen_series(E, q, 9) == one_plus_z * weight_gen_series(EPRIME, q, 9)


def test_dilog():
    assert dilog_series(HALF, 3) == z([0, 2, F(2, 3)], 3)
    li = dilog_series(HALF, 3)
    assert z([1, 1], 3) * weight_gen_series(EPRIME, HALF, 3) == (-li.scale_variable(-1)).exp()
    assert (-li.scale_variable(-1)).exp() == z([1, 2, F(4, 3)], 3)
    for q in (HALF, F(1, 3)):
        assert all(dilog_identities(q, 9).values())


def test_content_product_examples():
    c1 = F(2, 5)
    for model, q in ((EPRIME, HALF), (EXP, None), (WeightModel.product((c1,)), None)):
        assert content_product(model, (1,), q, 4).series == TruncatedSeries.constant("beta", 1, 4)
    s = content_product(WeightModel.product((c1,)), (2,), None, 4).series
    assert s.coefficients(0, 4) == [1, c1, 0, 0]
    s = content_product(EXP, (2, 1), None, 3).series
    assert s.coefficients(0, 3) == [1, 0, 0]


@pytest.mark.parametrize("n", range(1, 7))
def test_classical_content_product(n):
    for lam in enumerate_partitions(n):
        assert content_product(EXP, lam, None, 5).series == classical_content_product(lam, 5)


@pytest.mark.parametrize("n", range(1, 7))
def test_conjugation(n):
    c = (F(1), F(1, 2), F(-3))
    for lam in enumerate_partitions(n):
        a = content_product(WeightModel.product(c), lam, None, 4).series
        b = content_product(WeightModel.product([-x for x in c]), lam.conjugate(), None, 4).series
        assert a == b


def test_content_product_constant_term():
    for lam in enumerate_partitions(5):
        for model, q in ((EPRIME, HALF), (H, F(1, 3)), (WeightModel.inverse_product((1, HALF)), None)):
            assert content_product(model, lam, q, 3).series.coeff(0) == 1


def test_tau_examples():
    assert tau_coefficient(WeightModel.product((1,)), (3,), (3,), 2) == F(1, 3)
    assert tau_coefficient(WeightModel.product((1, HALF)), (2,), (2,), 2) == F(1, 4)


@pytest.mark.parametrize("n", range(1, 6))
def test_degree_zero(n):
    for mu in enumerate_partitions(n):
        for nu in enumerate_partitions(n):
            want = F(1, z_order(mu)) if mu == nu else 0
            assert tau_coefficient(H, mu, nu, 0, F(1, 3)) == want


def test_identity_examples():
    for convention in ("slots", "multiset"):
        cases = verify_generating_identity(WeightModel.product((1,)), 3, None, 2, convention)
        assert all(c.equal for c in cases)
    cases = verify_generating_identity(WeightModel.product((1, HALF)), 2, None, 2)
    assert all(c.equal for c in cases)
    assert all(c.equal for c in verify_generating_identity(EXP, 3, None, 3))


@pytest.mark.parametrize("model", [EPRIME, E, H])
@pytest.mark.parametrize("q", [HALF, F(1, 3)])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_generating_identity(model, q, n):
    assert all(c.equal for c in verify_generating_identity(model, n, q, 3))


def test_convention_adjudication():
    result = adjudicate_convention()
    assert result["chosen"] == "slots"
    assert result["failures"]["slots"] == 0
    assert result["failures"]["multiset"] > 0
