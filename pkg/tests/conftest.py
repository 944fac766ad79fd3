"""Shared helpers: independent brute-force oracles used to cross-check the
package's optimized implementations."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from equicolor import Coloring, WeightedGraph


def brute_factor(g: WeightedGraph, c: Coloring, every_vertex: bool):
    """Quadratic reference for the least equitability factor.

    Returns (factor, infinite).  ``every_vertex`` switches between the
    one-witness and the all-witnesses variant.
    """
    nonempty = [i for i in range(c.k) if c.classes[i]]
    if c.k <= 1 or not nonempty:
        return Fraction(0), False
    weights = [c.class_weight(g, i) for i in range(c.k)]
    worst = Fraction(0)
    infinite = False
    for i in nonempty:
        residuals = [weights[i] - g.weights[v] for v in c.classes[i]]
        # one removable witness: the best case; all: the worst case
        residual = max(residuals) if every_vertex else min(residuals)
        for j in range(c.k):
            if j == i:
                continue
            if weights[j] == 0:
                if residual > 0:
                    infinite = True
            else:
                worst = max(worst, residual / weights[j])
    return worst, infinite


def brute_mwis_weight(g: WeightedGraph):
    best = Fraction(0)
    for r in range(g.n + 1):
        for subset in combinations(range(g.n), r):
            chosen = set(subset)
            if all(v not in chosen for u in chosen for v in g.adjacency[u]):
                best = max(best, g.weight_of(chosen))
    return best


def assert_proper_total(g: WeightedGraph, c: Coloring):
    assert c.covered == frozenset(range(g.n))
    for u in range(g.n):
        for v in g.adjacency[u]:
            if u < v:
                assert c.assignment[u] != c.assignment[v], (u, v)
