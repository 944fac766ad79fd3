"""Envy-swap construction of a 2-EQ1 k-coloring for any k >= maxdeg + 1.

The while-loop needs an exact maximum-weight-independent-set decision, so
this module is desk-scale only; the search is branch-and-bound with a
configurable node budget.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Coloring, WeightedGraph
from .errors import PreconditionViolated
from .instances import oracle_max_weight_independent_set
from .verify import eq1_factor


def find_envied_independent_set(g: WeightedGraph, uncolored, min_class_weight,
                                budget=None):
    """An independent X inside ``uncolored`` with w(X) > min_class_weight,
    or None if none exists (exact answer via MWIS)."""
    pool = sorted(set(uncolored))
    if not pool:
        return None
    best_set, best_weight = oracle_max_weight_independent_set(g, pool, budget)
    if best_weight > min_class_weight:
        return best_set
    return None


def minimize_envied_set(g: WeightedGraph, envied, min_class_weight):
    """Shrink an envied independent set until no proper subset is envied.

    Removing the min-weight vertex yields the heaviest proper subset, so the
    result S satisfies w(S) > threshold and w(S) - min-wt(S) <= threshold.
    """
    current = sorted(envied)
    while True:
        lightest = min(current, key=lambda v: (g.weights[v], v))
        rest_weight = g.weight_of(current) - g.weights[lightest]
        if rest_weight <= min_class_weight:
            return current
        current.remove(lightest)


def two_eq1_coloring(g: WeightedGraph, k: int, budget=None,
                     check: bool = True) -> Coloring:
    """Swap loop plus greedy completion; output is exactly verified 2-EQ1."""
    delta = g.max_degree()
    if k < delta + 1:
        raise PreconditionViolated(f"need k >= maxdeg + 1, got k={k}, maxdeg={delta}")

    classes: list[set[int]] = [set() for _ in range(k)]
    class_weights = [Fraction(0) for _ in range(k)]
    uncolored = set(range(g.n))
    witnesses: dict[int, int] = {}  # class -> minimality witness vertex
    total = Fraction(0)

    while True:
        envier = min(range(k), key=lambda i: (class_weights[i], i))
        threshold = class_weights[envier]
        envied = find_envied_independent_set(g, uncolored, threshold, budget)
        if envied is None:
            break
        chosen = minimize_envied_set(g, envied, threshold)
        uncolored |= classes[envier]
        uncolored -= set(chosen)
        classes[envier] = set(chosen)
        class_weights[envier] = g.weight_of(chosen)
        witnesses[envier] = min(chosen, key=lambda v: (g.weights[v], v))
        new_total = sum(class_weights, Fraction(0))
        assert new_total > total, "swap loop measure must strictly increase"
        total = new_total

    # completion: every remaining vertex has a neighbor-free class (k >= maxdeg+1)
    for v in sorted(uncolored):
        nbrs = set(g.adjacency[v])
        for i in range(k):
            if not (nbrs & classes[i]):
                classes[i].add(v)
                class_weights[i] = class_weights[i] + g.weights[v]
                break
        else:  # pragma: no cover - impossible when k >= maxdeg + 1
            raise AssertionError(f"no neighbor-free class for vertex {v}")

    coloring = Coloring(k, classes)
    if check:
        report = eq1_factor(g, coloring)
        assert report.satisfies(2), f"2-EQ1 guarantee violated: {report}"
    return coloring
