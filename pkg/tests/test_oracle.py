"""The exhaustive oracle and its literal strategy-enumeration cross-check."""
from fractions import Fraction

import pytest

from dirichlet_bandits import (
    BanditState,
    InstanceGen,
    TooLargeError,
    brute_force_value,
    brute_force_value_exact,
    enumerate_strategy_values,
    make_discount,
    make_measure,
    make_uniform,
    mean,
    point_mass,
    value,
)
from dirichlet_bandits.verify import random_discount, random_measure

GEN = InstanceGen(seed=31)


def test_single_stage_closed_form():
    for i in range(20):
        rng = GEN.rng(i)
        arm1 = random_measure(GEN, rng, atoms=2)
        arm2 = random_measure(GEN, rng, atoms=2)
        a1 = float(rng.uniform(0.1, 2.0))
        state = BanditState(arm1, arm2, make_discount([a1]))
        expected = a1 * max(mean(arm1), mean(arm2))
        assert brute_force_value(state) == pytest.approx(expected, abs=1e-12)


def test_worked_instance_is_exact():
    state = BanditState(make_measure([(0, 1), (1, 1)]), point_mass(0.5), make_discount([1, 1]))
    assert brute_force_value_exact(state) == Fraction(13, 12)


def test_size_guard():
    big_arm = make_measure([(i, 1) for i in range(4)])
    with pytest.raises(TooLargeError):
        brute_force_value(BanditState(big_arm, big_arm, make_uniform(2)))
    with pytest.raises(TooLargeError):
        brute_force_value(BanditState(point_mass(0), point_mass(1), make_uniform(6)))


def test_literal_strategy_enumeration_matches_oracle():
    # Every deterministic strategy scored by path sums; the best one must
    # reproduce the oracle value exactly.
    for i in range(15):
        rng = GEN.rng(100 + i)
        arm1 = random_measure(GEN, rng, atoms=2)
        arm2 = random_measure(GEN, rng, atoms=int(rng.integers(1, 3)))
        n = int(rng.integers(1, 4))
        A = random_discount(GEN, rng, min_n=n, max_n=n)
        state = BanditState(arm1, arm2, A)
        vals = enumerate_strategy_values(state)
        assert max(vals) == brute_force_value_exact(state)


def test_suboptimal_strategies_do_not_exceed_oracle():
    state = BanditState(
        make_measure([(0, 1), (1, 1)]), point_mass(0.5), make_discount([1, 1])
    )
    best = brute_force_value_exact(state)
    for v in enumerate_strategy_values(state):
        assert v <= best


def test_agrees_with_solver_on_random_instances():
    for i in range(25):
        rng = GEN.rng(200 + i)
        arm1 = random_measure(GEN, rng, atoms=int(rng.integers(1, 4)))
        arm2 = random_measure(GEN, rng, atoms=int(rng.integers(1, 4)))
        n = int(rng.integers(1, 4))
        A = random_discount(GEN, rng, min_n=n, max_n=n)
        state = BanditState(arm1, arm2, A)
        assert value(state).w == pytest.approx(brute_force_value(state), abs=1e-10)
