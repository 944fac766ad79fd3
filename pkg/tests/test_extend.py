import random
from fractions import Fraction

import pytest

from equicolor import (
    Coloring,
    MatchingInfeasible,
    PreconditionViolated,
    WeightedGraph,
    extend_one_per_class,
    fill_up,
    gen_random_bounded_degree,
)

from conftest import assert_proper_total


def test_extend_one_per_class_basic():
    g = WeightedGraph(4, [(0, 1), (2, 3)], [Fraction(1)] * 4)
    c = Coloring(3, [[0], [1], []])
    out = extend_one_per_class(g, c, [2, 3], 3)
    assert out.covered == frozenset(range(4))
    # at most one newcomer per class
    for i in range(3):
        assert len(out.classes[i] - c.classes[i]) <= 1
    for u, v in g.edges():
        assert out.assignment[u] != out.assignment[v]


def test_extend_respects_allowed_classes():
    g = WeightedGraph(2, [], [Fraction(1)] * 2)
    c = Coloring(3, [[], [], []])
    out = extend_one_per_class(g, c, [0, 1], 3, allowed_classes=[1, 2])
    assert out.assignment[0] in (1, 2)
    assert out.assignment[1] in (1, 2)


def test_extend_prefers_lighter_classes():
    g = WeightedGraph(3, [], [Fraction(5), Fraction(1), Fraction(1)])
    c = Coloring(3, [[0], [1], []])
    out = extend_one_per_class(g, c, [2], 3)
    assert out.assignment[2] == 2  # the empty (lightest) class


def test_extend_rejects_recolored_vertex():
    g = WeightedGraph(2, [], [Fraction(1)] * 2)
    c = Coloring(2, [[0], []])
    with pytest.raises(ValueError):
        extend_one_per_class(g, c, [0], 2)


def test_extend_infeasible_raises():
    # triangle vertex adjacent to all classes, single allowed class blocked
    g = WeightedGraph(3, [(0, 2), (1, 2)], [Fraction(1)] * 3)
    c = Coloring(2, [[0], [1]])
    with pytest.raises(MatchingInfeasible):
        extend_one_per_class(g, c, [2], 2)


def test_fill_up_requires_enough_classes():
    g = WeightedGraph(3, [(0, 1), (1, 2), (0, 2)], [Fraction(1)] * 3)
    with pytest.raises(PreconditionViolated):
        fill_up(g, Coloring(2, [[], []]), 2)


def _residual_bound_holds(g, before, after, k):
    # each class gains at most w(uncolored)/(k - maxdeg) beyond its heaviest
    # newcomer
    delta = g.max_degree()
    pool = sorted(set(range(g.n)) - before.covered)
    budget = g.weight_of(pool) / (k - delta) if pool else Fraction(0)
    for i in range(k):
        gained = sorted(after.classes[i] - before.classes[i])
        if not gained:
            continue
        total = g.weight_of(gained)
        heaviest = g.max_weight_of(gained)
        assert total - heaviest <= budget, (i, total, heaviest, budget)


@pytest.mark.parametrize("seed", range(15))
def test_fill_up_random(seed):
    rng = random.Random(seed)
    n = rng.randint(5, 30)
    delta = rng.randint(1, min(4, n - 1))
    g = gen_random_bounded_degree(n, delta, seed=seed,
                                  weight_model="geometric")
    k = g.max_degree() + 1 + rng.randint(0, 4)
    start = Coloring(k, [[] for _ in range(k)])
    out = fill_up(g, start, k)
    assert_proper_total(g, out)
    _residual_bound_holds(g, start, out, k)


def test_fill_up_from_partial():
    g = WeightedGraph(6, [(0, 1), (2, 3)],
                      [Fraction(i + 1) for i in range(6)])
    start = Coloring(3, [[0], [1], []])
    out = fill_up(g, start, 3)
    assert_proper_total(g, out)
    # already-colored vertices keep their classes
    assert out.assignment[0] == 0 and out.assignment[1] == 1
    _residual_bound_holds(g, start, out, 3)


def test_fill_up_noop_when_total():
    g = WeightedGraph(2, [], [Fraction(1)] * 2)
    c = Coloring(2, [[0], [1]])
    assert fill_up(g, c, 2).classes == c.classes
