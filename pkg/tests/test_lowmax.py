import random
from fractions import Fraction

import pytest

from equicolor import (
    Coloring,
    PreconditionViolated,
    WeightedGraph,
    chromatic_initial_coloring,
    eq1_factor,
    gen_random_bounded_degree,
    greedy_coloring,
    low_max_wt_eq1,
    split_classes,
)

from conftest import assert_proper_total


def _spread_instance(n, delta, seed):
    # weights in {1, 2, 3}: max-wt <= eps*w(V)/k needs a tight spread
    g = gen_random_bounded_degree(n, delta, seed=seed)
    rng = random.Random(seed)
    weights = [Fraction(rng.choice([1, 2, 3])) for _ in range(n)]
    return WeightedGraph(n, g.edges(), weights)


def test_greedy_coloring_is_proper_and_small():
    for seed in range(8):
        g = gen_random_bounded_degree(30, 3, seed=seed)
        c = greedy_coloring(g)
        assert_proper_total(g, c)
        assert c.k <= g.max_degree() + 1


def test_chromatic_initial_coloring():
    # odd cycle: chromatic number 3
    g = WeightedGraph(5, [(i, (i + 1) % 5) for i in range(5)], [Fraction(1)] * 5)
    c = chromatic_initial_coloring(g)
    assert c.k == 3
    assert_proper_total(g, c)
    # bipartite path: 2 classes
    h = WeightedGraph(4, [(0, 1), (1, 2), (2, 3)], [Fraction(1)] * 4)
    assert chromatic_initial_coloring(h).k == 2


def test_split_classes_bounds():
    g = _spread_instance(600, 2, seed=0)
    initial = greedy_coloring(g)
    k, eps = 30, Fraction(1, 10)
    chunks = split_classes(g, initial, k, eps)
    total = g.total_weight()
    lo = (1 - 2 * eps) * total / k
    hi = (1 - eps) * total / k
    for chunk, witness in chunks:
        w = g.weight_of(chunk)
        assert lo <= w <= hi
        assert witness in chunk
        assert w - g.weights[witness] < lo  # minimality
        # each chunk is independent (it came from one class)
        for v in chunk:
            assert not (set(g.adjacency[v]) & set(chunk))
    assert len(chunks) >= k


def test_split_classes_rejects_heavy_vertex():
    g = WeightedGraph(3, [], [Fraction(100), Fraction(1), Fraction(1)])
    with pytest.raises(PreconditionViolated):
        split_classes(g, Coloring(1, [[0, 1, 2]]), 4, Fraction(1, 10))


def test_low_max_wt_validates_inputs():
    g = _spread_instance(100, 2, seed=1)
    initial = greedy_coloring(g)
    with pytest.raises(PreconditionViolated):
        low_max_wt_eq1(g, 100, Fraction(1, 5), initial)  # eps too large
    with pytest.raises(PreconditionViolated):
        low_max_wt_eq1(g, initial.k * 10 - 1, Fraction(1, 10), initial)
    improper = Coloring(initial.k, [list(range(g.n))]
                        + [[] for _ in range(initial.k - 1)])
    with pytest.raises(PreconditionViolated):
        low_max_wt_eq1(g, 100, Fraction(1, 10), improper)


@pytest.mark.parametrize("seed", range(4))
def test_low_max_wt_random(seed):
    g = _spread_instance(500, 2, seed=seed)
    initial = greedy_coloring(g)
    k = 10 * initial.k
    c = low_max_wt_eq1(g, k, Fraction(1, 10), initial)
    assert_proper_total(g, c)
    assert eq1_factor(g, c).satisfies(Fraction(17, 10))


def test_low_max_wt_zero_total_weight():
    g = WeightedGraph(20, [(i, i + 1) for i in range(19)], [Fraction(0)] * 20)
    initial = greedy_coloring(g)
    c = low_max_wt_eq1(g, 20, Fraction(1, 10), initial)
    assert_proper_total(g, c)


def test_low_max_wt_with_chromatic_start():
    # disjoint triangles: chromatic number 3, small components keep the
    # exhaustive search cheap
    copies = 150
    edges = []
    for t in range(copies):
        a = 3 * t
        edges += [(a, a + 1), (a + 1, a + 2), (a, a + 2)]
    rng = random.Random(3)
    weights = [Fraction(rng.choice([1, 2])) for _ in range(3 * copies)]
    g = WeightedGraph(3 * copies, edges, weights)
    initial = chromatic_initial_coloring(g)
    assert initial.k == 3
    c = low_max_wt_eq1(g, 30, Fraction(1, 10), initial)
    assert_proper_total(g, c)
    assert eq1_factor(g, c).satisfies(Fraction(17, 10))
