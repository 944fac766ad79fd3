import random
from fractions import Fraction

import pytest

from equicolor import (
    AttemptsExhausted,
    DependencyInstance,
    PreconditionViolated,
    WeightedGraph,
    class_probability_closed_form,
    concentration_bound,
    estimate_class_probability,
    gen_random_bounded_degree,
    monte_carlo_tail,
    random_partial_coloring,
)
from equicolor.randomized import (
    copied_pair_instance,
    cycle_dependent_instance,
    independent_bernoulli_instance,
)


def test_closed_form_values():
    g = WeightedGraph(3, [(0, 1)], [Fraction(1)] * 3)
    # degree 1, k=2: (1/2)(1 - (1/2)^2) = 3/8
    assert class_probability_closed_form(g, 2, 0) == Fraction(3, 8)
    # isolated vertex always keeps its tentative color
    assert class_probability_closed_form(g, 2, 2) == Fraction(1, 2)
    assert class_probability_closed_form(g, 7, 2) == Fraction(1, 7)


def test_partial_coloring_is_seeded_and_proper():
    g = gen_random_bounded_degree(25, 3, seed=4)
    a = random_partial_coloring(g, 5, seed=11)
    b = random_partial_coloring(g, 5, seed=11)
    assert a.classes == b.classes
    assert random_partial_coloring(g, 5, seed=12).classes != a.classes
    for u, v in g.edges():
        if u in a.covered and v in a.covered:
            assert a.assignment[u] != a.assignment[v]
    with pytest.raises(PreconditionViolated):
        random_partial_coloring(g, g.max_degree(), seed=0)


def test_estimate_matches_closed_form():
    g = WeightedGraph(4, [(0, 1), (1, 2)], [Fraction(1)] * 4)
    k, trials = 4, 4000
    for v in range(g.n):
        estimate, radius = estimate_class_probability(g, k, v, 0, trials, seed=v)
        exact = class_probability_closed_form(g, k, v)
        assert abs(estimate - exact) <= 4 * radius
    assert radius == Fraction(1, 2 * 63)  # isqrt(4000) = 63


def test_randomized_preconditions():
    from equicolor import randomized_eps_eq1

    g = gen_random_bounded_degree(30, 2, seed=0)
    with pytest.raises(PreconditionViolated):
        randomized_eps_eq1(g, 10 ** 4, Fraction(1, 50), 5, seed=0)
    with pytest.raises(PreconditionViolated):
        randomized_eps_eq1(g, 100, Fraction(1, 100), 5, seed=0)  # k too small
    # the weight gate fires for any desk-scale instance
    with pytest.raises(PreconditionViolated):
        randomized_eps_eq1(g, 300, Fraction(1, 100), 5, seed=0)


def test_randomized_exhausts_attempts_on_hopeless_instance():
    from equicolor import randomized_eps_eq1

    # geometric weights: some class holds two heavy vertices while another
    # holds a single unit vertex, so the factor check always rejects
    g = WeightedGraph(150, [], [Fraction(2) ** i for i in range(150)])
    with pytest.raises(AttemptsExhausted):
        randomized_eps_eq1(g, 100, Fraction(1, 100), 3, seed=0,
                           enforce_weight_bound=False)


def test_instance_validation():
    g = WeightedGraph(2, [], [Fraction(1)] * 2)
    with pytest.raises(ValueError):
        DependencyInstance([(Fraction(0), Fraction(1))], g, lambda rng: [0, 0])
    with pytest.raises(ValueError):
        DependencyInstance([(Fraction(1), Fraction(0))] * 2, g,
                           lambda rng: [0, 0])


def test_concentration_bound_values():
    with pytest.raises(ValueError):
        concentration_bound(copied_pair_instance(), 0)
    # copied pair: maxdeg 1, S=2, M=1 -> 2*exp(-1/6)
    bound = concentration_bound(copied_pair_instance(), 1)
    assert Fraction(169, 100) < bound < Fraction(170, 100)
    # one variable: exp(-2/3) ~ 0.51342
    one = DependencyInstance([(Fraction(0), Fraction(1))],
                             WeightedGraph(1, [], [Fraction(1)]),
                             lambda rng: [Fraction(rng.randrange(2))],
                             mean=Fraction(1, 2))
    b = concentration_bound(one, 1)
    assert Fraction(51342, 100000) - Fraction(1, 1000) < b \
        < Fraction(51342, 100000) + Fraction(1, 1000)


def test_concentration_bound_constant_sum_is_zero():
    const = DependencyInstance([(Fraction(1), Fraction(1))] * 3,
                               WeightedGraph(3, [], [Fraction(1)] * 3),
                               lambda rng: [Fraction(1)] * 3,
                               mean=Fraction(3))
    assert concentration_bound(const, 1) == 0


def test_concentration_bound_grows_with_interval_width():
    g = WeightedGraph(4, [], [Fraction(1)] * 4)

    def make(width):
        return DependencyInstance(
            [(Fraction(0), Fraction(width))] * 4, g,
            lambda rng: [Fraction(0)] * 4, mean=Fraction(0))

    t = Fraction(3, 2)
    assert concentration_bound(make(1), t) \
        < concentration_bound(make(2), t) \
        < concentration_bound(make(3), t)


def test_empirical_tails_stay_below_bounds():
    trials = 2000
    cases = [
        (independent_bernoulli_instance(8), Fraction(2)),
        (copied_pair_instance(), Fraction(1)),
        (cycle_dependent_instance(9), Fraction(3, 2)),
    ]
    slack = Fraction(3, 2 * 44)  # 3 sigma at isqrt(2000) = 44
    for instance, t in cases:
        tail = monte_carlo_tail(instance, t, trials, seed=7)
        bound = min(concentration_bound(instance, t), Fraction(1))
        assert tail <= bound + slack


def test_monte_carlo_exact_values():
    # copied pair: the sum is 0 or 2 with mean 1, so the tail at t=1 is 1/2
    tail = monte_carlo_tail(copied_pair_instance(), 1, 3000, seed=1)
    assert abs(tail - Fraction(1, 2)) < Fraction(1, 20)
    # estimated-mean path: t slightly below 1 absorbs the mean's sampling
    # error (an estimate just above 1 would otherwise exclude X = 2)
    inst = copied_pair_instance()
    inst.mean = None
    tail2 = monte_carlo_tail(inst, Fraction(9, 10), 3000, seed=1)
    assert abs(tail2 - Fraction(1, 2)) < Fraction(1, 10)


def test_draw_checks_intervals():
    g = WeightedGraph(1, [], [Fraction(1)])
    bad = DependencyInstance([(Fraction(0), Fraction(1))], g,
                             lambda rng: [Fraction(2)])
    with pytest.raises(AssertionError):
        bad.draw(random.Random(0))
