"""Randomized coloring process, its Monte-Carlo checks, and the
dependency-graph concentration bound.

The process picks a random vertex order and tentative colors; a vertex keeps
its color unless an earlier neighbor drew the same one.  Accepting only the
attempts whose class weights stay near their expectation yields a
(1 + 25*eps)-EQ1 coloring after filling up.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable

from .certbounds import exp_bounds, ln_bounds
from .core import Coloring, Rational, WeightedGraph
from .errors import AttemptsExhausted, PreconditionViolated
from .extend import fill_up
from .swap2eq1 import two_eq1_coloring
from .verify import eq1_factor


def class_probability_closed_form(g: WeightedGraph, k: int, vertex: int) -> Fraction:
    """Exact Pr{vertex ends up in any fixed class}:
    (1/(deg+1)) * (1 - (1 - 1/k)^(deg+1))."""
    deg = len(g.adjacency[vertex])
    return Fraction(1, deg + 1) * (1 - (1 - Fraction(1, k)) ** (deg + 1))


def random_partial_coloring(g: WeightedGraph, k: int, seed: int) -> Coloring:
    """One run of the process; deterministic in the seed.  A vertex stays
    uncolored iff an earlier neighbor in the random order drew the same
    tentative color, so the kept colors always form a proper coloring."""
    delta = g.max_degree()
    if k < delta + 1:
        raise PreconditionViolated(f"need k >= maxdeg + 1, got k={k}")
    rng = random.Random(seed)
    order = list(range(g.n))
    rng.shuffle(order)
    tentative = {v: rng.randrange(k) for v in order}
    position = {v: pos for pos, v in enumerate(order)}

    classes = [set() for _ in range(k)]
    for v in order:
        clashed = any(
            position[u] < position[v] and tentative[u] == tentative[v]
            for u in g.adjacency[v]
        )
        if not clashed:
            classes[tentative[v]].add(v)
    return Coloring(k, classes)


def estimate_class_probability(g: WeightedGraph, k: int, vertex: int,
                               color: int, trials: int, seed: int):
    """Monte-Carlo Pr{vertex in the given class} with a one-sigma binomial
    confidence radius (rational upper bound on sqrt(p(1-p)/trials))."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    rng = random.Random(seed)
    hits = 0
    for _ in range(trials):
        partial = random_partial_coloring(g, k, rng.getrandbits(64))
        if vertex in partial.classes[color]:
            hits += 1
    # sigma <= 1/(2*sqrt(trials)) <= 1/(2*floor(sqrt(trials)))
    radius = Fraction(1, 2 * isqrt(trials))
    return Fraction(hits, trials), radius


def randomized_eps_eq1(g: WeightedGraph, k: int, eps, max_attempts: int,
                       seed: int, stats: dict | None = None,
                       enforce_weight_bound: bool = True) -> Coloring:
    """(1 + 25*eps)-EQ1 k-coloring for eps in (0, 1/100], k >= (maxdeg+1)/eps,
    and max-wt(V) <= eps^2*w(V)/(k^2*ln k).

    Attempts are rejected while some class weight deviates from its exact
    expectation by more than 6*sqrt(w(V)*ln k) in max-weight-normalized
    units; each attempt fails with probability at most 2/k.  Every accepted
    attempt is additionally verified exactly against the factor guarantee,
    so disabling ``enforce_weight_bound`` (the weight precondition needs
    instances with w(V)/max-wt on the order of k^2*ln(k)/eps^2) can cost
    attempts but never correctness.
    """
    eps = Fraction(eps)
    if not 0 < eps <= Fraction(1, 100):
        raise PreconditionViolated(f"need eps in (0, 1/100], got {eps}")
    delta = g.max_degree()
    if k < (delta + 1) / eps:
        raise PreconditionViolated(
            f"need k >= (maxdeg + 1)/eps = {(delta + 1) / eps}, got k={k}"
        )
    total = g.total_weight()
    heaviest = max((g.weights[v] for v in range(g.n)), default=Fraction(0))
    ln_k_lo, ln_k_hi = ln_bounds(Fraction(k))
    # over-estimating ln k strengthens the check, never falsely accepts
    if enforce_weight_bound and heaviest * k * k * ln_k_hi > eps ** 2 * total:
        raise PreconditionViolated(
            "need max-wt <= eps^2*w(V)/(k^2*ln k)"
        )

    expectations = [
        g.weights[v] * class_probability_closed_form(g, k, v)
        for v in range(g.n)
    ]
    mean_class_weight = sum(expectations, Fraction(0))  # same for every class

    rng = random.Random(seed)
    for attempt in range(max_attempts):
        partial = random_partial_coloring(g, k, rng.getrandbits(64))
        # squared comparison: dev^2 <= 36*w(V)*max-wt*ln k, with the lower
        # ln endpoint so acceptance is never optimistic
        cap = 36 * total * heaviest * ln_k_lo
        accepted = all(
            (partial.class_weight(g, i) - mean_class_weight) ** 2 <= cap
            for i in range(k)
        )
        if accepted:
            coloring = fill_up(g, partial, k)
            report = eq1_factor(g, coloring)
            if report.satisfies(1 + 25 * eps):
                if stats is not None:
                    stats["attempts"] = attempt + 1
                return coloring
    raise AttemptsExhausted(
        f"no attempt passed the deviation check in {max_attempts} tries"
    )


@dataclass
class DependencyInstance:
    """Bounded random variables with a dependency graph: variables joined by
    an edge may be correlated, non-adjacent ones must be independent.

    ``sampler`` draws one joint outcome from a seeded generator; ``mean`` is
    the exact expectation of the sum when known, otherwise it is estimated
    from the trials.
    """

    intervals: list[tuple[Rational, Rational]]
    graph: WeightedGraph  # topology only; its weights are ignored
    sampler: Callable[[random.Random], list]
    mean: Fraction | None = None

    def __post_init__(self):
        if len(self.intervals) != self.graph.n:
            raise ValueError("one interval per variable required")
        for a, b in self.intervals:
            if a > b:
                raise ValueError(f"empty interval [{a}, {b}]")

    @property
    def n(self) -> int:
        return self.graph.n

    def draw(self, rng: random.Random) -> list:
        values = self.sampler(rng)
        assert len(values) == self.n
        for x, (a, b) in zip(values, self.intervals):
            assert a <= x <= b, "sample left its interval"
        return values


def concentration_bound(instance: DependencyInstance, t) -> Fraction:
    """Upper bound on Pr{X - E[X] >= t} for X the sum of the variables:
    (maxdeg+1) * exp(-2t^2 / (2(maxdeg+1)S + (maxdeg+1)^2 M)) with
    S = sum (b_i-a_i)^2 and M = max (b_i-a_i)^2.

    Returned unclipped (it exceeds 1 for small t); evaluation uses a
    certified rational upper bound on exp.
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("need t > 0")
    widths_sq = [(b - a) ** 2 for a, b in instance.intervals]
    delta = instance.graph.max_degree()
    spread = sum(widths_sq, Fraction(0))
    peak = max(widths_sq, default=Fraction(0))
    if spread == 0:
        return Fraction(0)  # constant sum never deviates

    # the proof's class-weight cap must hold for the recomputed coloring
    weighted = WeightedGraph(instance.graph.n, instance.graph.edges(), widths_sq)
    coloring = two_eq1_coloring(weighted, delta + 1)
    for j in range(delta + 1):
        assert (delta + 1) * coloring.class_weight(weighted, j) \
            <= 2 * spread + (delta + 1) * peak, "class weight cap violated"

    exponent = -2 * t ** 2 / (2 * (delta + 1) * spread + (delta + 1) ** 2 * peak)
    return (delta + 1) * exp_bounds(exponent)[1]


def monte_carlo_tail(instance: DependencyInstance, t, trials: int,
                     seed: int) -> Fraction:
    """Empirical Pr{X - E[X] >= t} over seeded trials."""
    t = Fraction(t)
    rng = random.Random(seed)
    sums = [sum(instance.draw(rng), Fraction(0)) for _ in range(trials)]
    mean = instance.mean
    if mean is None:
        mean = sum(sums, Fraction(0)) / trials
    hits = sum(1 for x in sums if x - mean >= t)
    return Fraction(hits, trials)


def independent_bernoulli_instance(n: int) -> DependencyInstance:
    """n independent fair coin flips; edgeless dependency graph."""
    g = WeightedGraph(n, [], [Fraction(1)] * n)
    return DependencyInstance(
        intervals=[(Fraction(0), Fraction(1))] * n,
        graph=g,
        sampler=lambda rng: [Fraction(rng.randrange(2)) for _ in range(n)],
        mean=Fraction(n, 2),
    )


def copied_pair_instance() -> DependencyInstance:
    """Two fully dependent variables (one flip, used twice)."""
    g = WeightedGraph(2, [(0, 1)], [Fraction(1)] * 2)

    def sample(rng: random.Random):
        x = Fraction(rng.randrange(2))
        return [x, x]

    return DependencyInstance(
        intervals=[(Fraction(0), Fraction(1))] * 2,
        graph=g,
        sampler=sample,
        mean=Fraction(1),
    )


def cycle_dependent_instance(n: int) -> DependencyInstance:
    """Cycle dependency: variable i averages its own flip with neighbor
    i+1's, so adjacent variables are correlated and the rest independent."""
    if n < 3:
        raise ValueError("need n >= 3 for a cycle")
    edges = [(i, (i + 1) % n) for i in range(n)]
    g = WeightedGraph(n, edges, [Fraction(1)] * n)

    def sample(rng: random.Random):
        flips = [Fraction(rng.randrange(2)) for _ in range(n)]
        return [(flips[i] + flips[(i + 1) % n]) / 2 for i in range(n)]

    return DependencyInstance(
        intervals=[(Fraction(0), Fraction(1))] * n,
        graph=g,
        sampler=sample,
        mean=Fraction(n, 2),
    )
