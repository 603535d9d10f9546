import math
from fractions import Fraction

import pytest

from qhurwitz.algebra import TruncatedSeries, exp_monomial
from qhurwitz.hurwitz import hurwitz_number
from qhurwitz.partitions import aut_order, enumerate_partitions, special_partition
from qhurwitz.semiclassics import (dilog_coefficient_series, hurwitz_series_combination,
                                   partition_function_series, partition_function_series_via_q,
                                   phi_series, w0, w1, weight_series, weighted_hurwitz_series)
from qhurwitz.weights import E, EPRIME, EXP, H

F = Fraction
MODELS = [EPRIME, E, H]


def eps(coeffs, order, min_exp=0):
    return TruncatedSeries.from_coeffs("epsilon", coeffs, order, min_exp)


# 1/(e^x - 1) = 1/x - 1/2 + x/12 - x^3/720 + ...
BERNOULLI = [F(1), F(-1, 2), F(1, 12), F(0), F(-1, 720)]


def test_phi_examples():
    s = phi_series(EPRIME, (1, 1), 1)
    assert s.coefficients(-2, 0) == [1, F(-3, 2)]
    for d in range(1, 8):
        s = phi_series(EPRIME, [1] * d, 1)
        assert s.coefficients(-d, 2 - d) == [1, F(-d * (d + 1), 4)]
    for d in range(2, 8):
        assert phi_series(EPRIME, [2] + [1] * (d - 2), 0).coeff(1 - d) == F(1, 2)


def test_single_part_against_bernoulli():
    # phi(x) for one part s is 1/(e^{s eps} - 1)
    for s in (1, 2, 3):
        series = phi_series(EPRIME, (s,), 3)
        want = [b * F(s) ** (k - 1) for k, b in enumerate(BERNOULLI[:4])]
        assert series.coefficients(-1, 3) == want


def test_w_examples():
    assert w0((1, 1, 1)) == 1
    assert w0((3,)) == F(1, 3)
    assert w1((2,)) == F(1, 2)


def test_weight_series_examples():
    assert weight_series(EPRIME, (2,), 1).coefficients(-1, 1) == [F(1, 2), F(-1, 2)]
    assert weight_series(EPRIME, (1, 1), 1).coefficients(-2, 0) == [F(1, 2), F(-3, 4)]
    assert weight_series(H, (2,), 1).coefficients(-1, 1) == [F(-1, 2), F(-1, 2)]


@pytest.mark.parametrize("d", range(1, 7))
def test_weight_series_leading_orders(d):
    for lam in enumerate_partitions(d):
        aut = aut_order(lam)
        ell = len(lam)
        sign = -1 if (d - ell) % 2 else 1
        assert weight_series(EPRIME, lam, 1).coefficients(-ell, 2 - ell) == [w0(lam) / aut, -w1(lam) / aut]
        assert weight_series(E, lam, 1).coefficients(-ell, 2 - ell) == [w0(lam) / aut, (d * w0(lam) - w1(lam)) / aut]
        assert weight_series(H, lam, 1).coefficients(-ell, 2 - ell) == [sign * w0(lam) / aut, sign * w1(lam) / aut]


@pytest.mark.parametrize("d", range(1, 7))
def test_e_transfer(d):
    for lam in enumerate_partitions(d):
        lhs = weight_series(E, lam, 2)
        rhs = (exp_monomial(d, 3) * weight_series(EPRIME, lam, 2)).truncate(lhs.order)
        assert lhs == rhs


def test_partition_function_examples():
    assert partition_function_series(EPRIME, 2, 1) == eps([F(1, 2), F(1, 4)], 2)
    assert partition_function_series(EPRIME, 3, 1) == eps([F(1, 6), F(1, 2)], 2)
    assert partition_function_series(E, 2, 1) == eps([F(1, 2), F(5, 4)], 2)
    assert partition_function_series(H, 2, 1) == eps([F(1, 2), F(-1, 4)], 2)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("d", range(1, 5))
def test_two_paths_agree(model, d):
    assert partition_function_series(model, d, 3) == partition_function_series_via_q(model, d, 3)


def test_eprime_first_order_general_form():
    for d in range(2, 6):
        s = partition_function_series(EPRIME, d, 1)
        assert s.coefficients(0, 2) == [F(1, math.factorial(d)), F(3 * d - 5, 4 * math.factorial(d - 1))]


def test_hurwitz_combination_degree_two():
    comb = hurwitz_series_combination(EPRIME, 4, 2, 1)
    two = special_partition(2, 1, 4)
    assert comb == {
        (two, two): [F(1, 2), F(-3, 4)],
        ((3, 1),): [0, F(1, 2)],
        ((2, 2),): [0, F(1, 2)],
    }


@pytest.mark.parametrize("model", MODELS)
def test_classical_limit_of_weighted_hurwitz(model):
    for n, d in ((2, 1), (3, 1), (4, 1), (4, 2)):
        two = special_partition(2, 1, n)
        for mu in enumerate_partitions(n):
            for nu in enumerate_partitions(n):
                lead = weighted_hurwitz_series(model, mu, nu, d, 0)[0]
                assert lead == hurwitz_number([two] * d + [mu, nu], n) / math.factorial(d)


def test_weighted_hurwitz_series_mismatch():
    with pytest.raises(ValueError):
        weighted_hurwitz_series(EPRIME, (2, 1), (2,), 1)


def test_quantum_only():
    with pytest.raises(ValueError):
        phi_series(EXP, (1,), 2)


def test_dilog_coefficients():
    assert dilog_coefficient_series(1, 1) == eps([1, F(1, 2)], 2)
    assert dilog_coefficient_series(2, 0).coefficients(0, 2) == [0, F(1, 4)]
    assert dilog_coefficient_series(3, 0).coefficients(0, 3) == [0, 0, F(1, 9)]
