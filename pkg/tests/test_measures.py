import math
from fractions import Fraction

import pytest

from qhurwitz.hurwitz import hurwitz_number
from qhurwitz.measures import (BranchConfig, ZeroPartitionFunctionError, config_partition_function,
                               enumerate_configs, expectation_hurwitz, fiber_size, lambda_map,
                               measure_theta, measure_xi, ordered_tuple_count, partition_function,
                               slot_assignments, tv_distance_to_dirac, weighted_hurwitz,
                               weighted_hurwitz_terms)
from qhurwitz.partitions import Partition, enumerate_partitions, special_partition
from qhurwitz.weights import E, EPRIME, EXP, H, WeightModel, weight_profile

F = Fraction
HALF = F(1, 2)
P = Partition


def test_configs_examples():
    assert enumerate_configs(4, 1) == [(P([1]), ((2, 1, 1),))]
    assert slot_assignments(6, (2,)) == [((3, 1, 1, 1),), ((2, 2, 1, 1),)]
    assert fiber_size(4, (1, 1)) == 1
    assert fiber_size(4, (2,)) == 2
    assert len(enumerate_configs(4, 2)) == 3


def test_lambda_map():
    assert lambda_map([(2, 1, 1), (2, 1, 1)]) == (1, 1)
    assert lambda_map([(3, 1), (2, 1, 1)]) == (2, 1)
    assert lambda_map(BranchConfig(4, [(2, 2)])) == (2,)


def test_branch_config_validation():
    with pytest.raises(ValueError):
        BranchConfig(4, [(1, 1, 1, 1)])
    with pytest.raises(ValueError):
        BranchConfig(4, [(2, 1)])


def test_partition_function_examples():
    assert partition_function(EPRIME, 2, HALF) == 1
    assert partition_function(EPRIME, 1, HALF) == 1
    assert partition_function(H, 1, HALF) == 2


def test_xi_examples():
    assert measure_xi(EPRIME, 2, HALF).as_dict() == {P([2]): F(2, 3), P([1, 1]): F(1, 3)}
    for model, q in ((EPRIME, HALF), (H, F(1, 3)), (EXP, None)):
        assert measure_xi(model, 1, q).as_dict() == {P([1]): 1}
    q = F(1, 4)
    w11 = F(2, 3 * 15) / 2
    w2 = 1 / (q ** -2 - 1)
    z = w11 + 2 * w2
    assert measure_xi(EPRIME, 2, q).as_dict() == {P([2]): 2 * w2 / z, P([1, 1]): w11 / z}


def test_theta_examples():
    theta = measure_theta(EPRIME, 4, 1, HALF)
    assert [(k.profiles, m) for k, m in theta.support] == [(((2, 1, 1),), 1)]
    theta = measure_theta(EPRIME, 4, 2, HALF)
    masses = {k.profiles: m for k, m in theta.support}
    assert masses == {((3, 1),): F(1, 3), ((2, 2),): F(1, 3), ((2, 1, 1), (2, 1, 1)): F(1, 3)}
    assert theta.pushforward(lambda_map).as_dict() == {P([2]): F(2, 3), P([1, 1]): F(1, 3)}


def test_zero_partition_function():
    assert partition_function(H, 2, HALF) == 0
    with pytest.raises(ZeroPartitionFunctionError):
        measure_xi(H, 2, HALF)
    with pytest.raises(ZeroPartitionFunctionError):
        expectation_hurwitz(H, (2,), (2,), 2, HALF)


def test_signed_measure_flags():
    xi = measure_xi(H, 3, F(1, 3))
    assert xi.total == 1
    assert xi.total_variation > 1
    assert not xi.ill_conditioned


@pytest.mark.parametrize("model", [EPRIME, E, H])
@pytest.mark.parametrize("q", [HALF, F(1, 3)])
@pytest.mark.parametrize("d", range(1, 5))
def test_n_independence(model, q, d):
    z = partition_function(model, d, q)
    for n in (2 * d, 2 * d + 1, 2 * d + 2):
        assert config_partition_function(model, n, d, q) == z
        if z:
            pushed = measure_theta(model, n, d, q).pushforward(lambda_map)
            assert pushed.as_dict() == measure_xi(model, d, q).as_dict()
            assert pushed.total == 1


def test_weighted_hurwitz_examples():
    assert weighted_hurwitz(EPRIME, (3,), (2, 1), 1, HALF) == 1
    assert expectation_hurwitz(EPRIME, (3,), (2, 1), 1, HALF) == 1
    assert weighted_hurwitz(WeightModel.product((1,)), (3,), (3,), 2) == F(1, 3)


def test_weighted_hurwitz_expectation_from_theta():
    mu = nu = (1, 1, 1, 1)
    want = sum(m * hurwitz_number(list(k.profiles) + [mu, nu], 4)
               for k, m in measure_theta(EPRIME, 4, 2, HALF).support)
    assert expectation_hurwitz(EPRIME, mu, nu, 2, HALF) == want


def test_exp_model_is_simple_hurwitz():
    n = 4
    two = special_partition(2, 1, n)
    for d in range(1, 4):
        for mu in enumerate_partitions(n):
            for nu in enumerate_partitions(n):
                simple = hurwitz_number([two] * d + [mu, nu], n)
                assert weighted_hurwitz(EXP, mu, nu, d) == simple / math.factorial(d)
                assert expectation_hurwitz(EXP, mu, nu, d) == simple


def test_degree_zero_is_plain_hurwitz():
    for mu in enumerate_partitions(4):
        for nu in enumerate_partitions(4):
            assert weighted_hurwitz(EPRIME, mu, nu, 0, HALF) == hurwitz_number([mu, nu], 4)


def test_conventions_agree_below_degree_four():
    for n in range(2, 5):
        for d in range(1, 4):
            a = weighted_hurwitz_terms(EPRIME, n, d, HALF, "slots")
            b = weighted_hurwitz_terms(EPRIME, n, d, HALF, "multiset")
            assert a == b


def test_conventions_differ_at_degree_four():
    a = weighted_hurwitz_terms(EPRIME, 4, 4, HALF, "slots")
    b = weighted_hurwitz_terms(EPRIME, 4, 4, HALF, "multiset")
    key = (P([3, 1]), P([2, 2]))
    assert a[key] == 2 * b[key]


def test_tv_distance():
    xi = measure_xi(EPRIME, 2, HALF)
    assert tv_distance_to_dirac(xi, P([1, 1])) == F(2, 3)
    assert tv_distance_to_dirac(measure_xi(EPRIME, 1, HALF), P([1])) == 0


@pytest.mark.parametrize("model", [EPRIME, E])
@pytest.mark.parametrize("d", range(2, 5))
def test_tv_decreases_towards_classical(model, d):
    qs = (HALF, F(3, 4), F(7, 8), F(15, 16))
    tvs = [tv_distance_to_dirac(measure_xi(model, d, q), P([1] * d)) for q in qs]
    assert all(a > b for a, b in zip(tvs, tvs[1:]))


def test_ordered_tuples_carry_multinomial():
    assert ordered_tuple_count(6, (2, 1)) == 2 * fiber_size(6, (2, 1))
    assert ordered_tuple_count(6, (1, 1)) == fiber_size(6, (1, 1))
