import random
from fractions import Fraction

import pytest

from equicolor import (
    BudgetExceeded,
    PreconditionViolated,
    WeightedGraph,
    eq1_factor,
    find_envied_independent_set,
    gen_random_bounded_degree,
    minimize_envied_set,
    two_eq1_coloring,
)

from conftest import assert_proper_total, brute_mwis_weight


def test_requires_enough_classes():
    g = WeightedGraph(3, [(0, 1), (1, 2), (0, 2)], [Fraction(1)] * 3)
    with pytest.raises(PreconditionViolated):
        two_eq1_coloring(g, 2)


def test_budget_exceeded_propagates():
    g = gen_random_bounded_degree(30, 4, seed=1)
    with pytest.raises(BudgetExceeded):
        two_eq1_coloring(g, 5, budget=3)


def test_find_envied_exactness():
    for seed in range(10):
        g = gen_random_bounded_degree(10, 3, seed=seed,
                                      weight_model="geometric")
        best = brute_mwis_weight(g)
        pool = list(range(g.n))
        # just below the optimum: must find a set beating the threshold
        found = find_envied_independent_set(g, pool, best - Fraction(1, 7))
        assert found is not None and g.weight_of(found) == best
        # at the optimum: nothing strictly heavier exists
        assert find_envied_independent_set(g, pool, best) is None


def test_minimize_envied_set():
    g = WeightedGraph(4, [], [Fraction(5), Fraction(3), Fraction(2), Fraction(1)])
    chosen = minimize_envied_set(g, [0, 1, 2, 3], Fraction(6))
    # w(S) > 6 but dropping the lightest member lands at or below 6
    w = g.weight_of(chosen)
    assert w > 6
    assert w - min(g.weights[v] for v in chosen) <= 6


def test_empty_graph_and_zero_weights():
    g = WeightedGraph(4, [], [Fraction(0)] * 4)
    c = two_eq1_coloring(g, 2)
    assert_proper_total(g, c)
    assert not eq1_factor(g, c).infinite


@pytest.mark.parametrize("seed", range(12))
def test_random_instances_are_2eq1(seed):
    rng = random.Random(seed)
    n = rng.randint(6, 24)
    delta = rng.randint(1, min(4, n - 1))
    model = rng.choice(["uniform", "geometric", "few-distinct"])
    g = gen_random_bounded_degree(n, delta, weight_model=model, seed=seed)
    k = g.max_degree() + 1 + rng.randint(0, 2)
    c = two_eq1_coloring(g, k)
    assert_proper_total(g, c)
    report = eq1_factor(g, c)
    assert report.satisfies(2), report
