"""Instance generators and desk-scale brute-force oracles.

The oracles certify guarantees exhaustively on small instances; all answers
are exact, with the sqrt(2) lower bound handled in the field Q(sqrt 2).
"""

from __future__ import annotations

import hashlib
import os
import random as _random
from dataclasses import dataclass
from fractions import Fraction

from .core import Coloring, WeightedGraph
from .errors import BudgetExceeded
from .verify import eq1_factor, eqx_factor

DEFAULT_BUDGET = 5_000_000


def _budget(value):
    if value is not None:
        return value
    env = os.environ.get("EQUICOLOR_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class QuadSurd:
    """Exact number a + b*sqrt(2) with rational a, b.

    Ring operations and division are exact; ordering is decided by sign
    analysis (compare a^2 with 2 b^2), never by floating point.  Rationals
    embed losslessly as b = 0.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _coerce(x):
        if isinstance(x, QuadSurd):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadSurd(x)
        return None

    def sign(self) -> int:
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        if a > 0:  # b < 0: positive iff a^2 > 2 b^2
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * self.b * self.b > self.a * self.a else -1

    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadSurd(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadSurd(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadSurd(other.a - self.a, other.b - self.b)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadSurd(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        denom = other.a * other.a - 2 * other.b * other.b
        if denom == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        conj = QuadSurd(other.a, -other.b)
        num = self * conj
        return QuadSurd(num.a / denom, num.b / denom)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return QuadSurd(-self.a, -self.b)

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __float__(self):
        # diagnostics only; never used in algorithm comparisons
        return float(self.a) + float(self.b) * 2 ** 0.5

    def __repr__(self):
        return f"QuadSurd({self.a!r}, {self.b!r})"


SQRT2 = QuadSurd(0, 1)


def instance_digest(g: WeightedGraph) -> str:
    payload = repr((g.n, g.adjacency, tuple(str(w) for w in g.weights)))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass
class OracleReport:
    """Exhaustive-search certificate for the minimum achievable EQ1 factor."""

    digest: str
    k: int
    min_alpha: object  # Fraction or QuadSurd; meaningless when infinite
    infinite: bool
    witness: Coloring | None
    exhausted_space: bool
    nodes: int


# ---------------------------------------------------------------------------
# generators

def gen_lower_bound_instance(delta: int) -> WeightedGraph:
    """K_{d,d} plus a disjoint K_{d+1}: weight 2 on one side, sqrt(2) on the
    other, 0 on the clique.  Requires odd delta >= 3."""
    if delta < 3 or delta % 2 == 0:
        raise ValueError("delta must be an odd integer >= 3")
    left = list(range(delta))
    right = list(range(delta, 2 * delta))
    clique = list(range(2 * delta, 3 * delta + 1))
    edges = [(u, v) for u in left for v in right]
    edges += [(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]]
    weights = (
        [QuadSurd(2)] * delta + [SQRT2] * delta + [QuadSurd(0)] * (delta + 1)
    )
    return WeightedGraph(3 * delta + 1, edges, weights)


def gen_eqx_counterexample(n: int, beta: Fraction) -> WeightedGraph:
    """Path 0-1-...-(n-1) with geometric weights beta^(i+1)."""
    if n < 2 or beta <= 1:
        raise ValueError("need n >= 2 and beta > 1")
    beta = Fraction(beta)
    edges = [(i, i + 1) for i in range(n - 1)]
    weights = [beta ** (i + 1) for i in range(n)]
    return WeightedGraph(n, edges, weights)


def gen_random_bounded_degree(n: int, delta: int, weight_model: str = "uniform",
                              seed: int = 0, distinct: int = 3,
                              edge_factor: int = 2) -> WeightedGraph:
    """Random graph with max degree <= delta, seeded and deterministic."""
    if delta >= n and n > 0:
        raise ValueError("delta must be less than n")
    rng = _random.Random(seed)
    degrees = [0] * n
    edges: set[tuple[int, int]] = set()
    if delta > 0 and n > 1:
        attempts = edge_factor * n * delta
        for _ in range(attempts):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            key = (min(u, v), max(u, v))
            if key in edges or degrees[u] >= delta or degrees[v] >= delta:
                continue
            edges.add(key)
            degrees[u] += 1
            degrees[v] += 1

    if weight_model == "uniform":
        weights = [Fraction(rng.randint(1, 100), rng.randint(1, 20)) for _ in range(n)]
    elif weight_model == "geometric":
        weights = [Fraction(2) ** rng.randint(0, 6) for _ in range(n)]
    elif weight_model == "few-distinct":
        values = sorted(
            {Fraction(rng.randint(1, 50), rng.randint(1, 10)) for _ in range(distinct)}
        )
        while len(values) < distinct:
            values.append(values[-1] + 1)
        weights = [values[rng.randrange(distinct)] for _ in range(n)]
    else:
        raise ValueError(f"unknown weight model: {weight_model}")
    return WeightedGraph(n, sorted(edges), weights)


# ---------------------------------------------------------------------------
# oracles

def _enumerate_colorings(g: WeightedGraph, k: int, budget: int, counter=None):
    """Yield every proper assignment vertex -> color, canonicalized by
    first-occurrence color renaming (cuts the space by up to k!).

    ``counter`` (a one-element list) accumulates search nodes across yields;
    exceeding ``budget`` raises BudgetExceeded.
    """
    n = g.n
    assignment = [-1] * n
    if counter is None:
        counter = [0]

    def backtrack(v, used):
        if v == n:
            yield assignment, used
            return
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded(f"oracle exceeded {budget} nodes")
        limit = min(used + 1, k)
        for color in range(limit):
            if any(assignment[u] == color for u in g.adjacency[v] if u < v):
                continue
            assignment[v] = color
            yield from backtrack(v + 1, max(used, color + 1))
            assignment[v] = -1

    yield from backtrack(0, 0)


def oracle_min_alpha_eq1(g: WeightedGraph, k: int, budget: int | None = None,
                         mode: str = "eq1") -> OracleReport:
    """Exact minimum achievable EQ1 (or EQX) factor over all proper
    k-colorings, by exhaustive canonical enumeration."""
    budget = _budget(budget)
    factor_of = eq1_factor if mode == "eq1" else eqx_factor
    best = None
    best_infinite = True
    witness = None
    counter = [0]
    exhausted = True
    try:
        for assignment, _used in _enumerate_colorings(g, k, budget, counter):
            classes = [[] for _ in range(k)]
            for v, color in enumerate(assignment):
                classes[color].append(v)
            coloring = Coloring(k, classes)
            report = factor_of(g, coloring)
            if report.infinite:
                continue
            if best_infinite or report.factor < best:
                best = report.factor
                best_infinite = False
                witness = coloring
                if best == 0:
                    break  # cannot improve on zero
    except BudgetExceeded:
        exhausted = False
    return OracleReport(
        digest=instance_digest(g),
        k=k,
        min_alpha=best if best is not None else Fraction(0),
        infinite=best_infinite,
        witness=witness,
        exhausted_space=exhausted,
        nodes=counter[0],
    )


def _component_vertices(g: WeightedGraph):
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        yield sorted(comp)


def _colorable(g: WeightedGraph, k: int, budget: int) -> bool:
    for _ in _enumerate_colorings(g, k, budget):
        return True
    return False


def oracle_chromatic_number(g: WeightedGraph, budget: int | None = None) -> int:
    """Exact chromatic number, computed per connected component."""
    budget = _budget(budget)
    if g.n == 0:
        return 0
    best = 1
    for comp in _component_vertices(g):
        sub, _ = g.induced_subgraph(comp)
        if sub.edge_count() == 0:
            chi = 1
        elif _is_bipartite(sub):
            chi = 2
        else:
            chi = 3
            while not _colorable(sub, chi, budget):
                chi += 1
        best = max(best, chi)
    return best


def _is_bipartite(g: WeightedGraph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def _greedy_independent_set(g: WeightedGraph, pool: list[int]):
    """Heaviest-first greedy; exact lower bound to warm-start the search."""
    chosen: list[int] = []
    blocked: set[int] = set()
    for v in sorted(pool, key=lambda v: (-g.weights[v], v)):
        if v not in blocked:
            chosen.append(v)
            blocked.update(g.adjacency[v])
    return chosen, g.weight_of(chosen)


def _mwis_component(g: WeightedGraph, pool: list[int], budget: int, nodes):
    best_set, best_weight = _greedy_independent_set(g, pool)

    def branch(avail, current, current_weight):
        nonlocal best_set, best_weight
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceeded(f"MWIS search exceeded {budget} nodes")
        if current_weight + sum((g.weights[v] for v in avail), Fraction(0)) \
                <= best_weight:
            return
        avail_set = set(avail)
        degree = {
            v: sum(1 for u in g.adjacency[v] if u in avail_set) for v in avail
        }
        if not avail or max(degree.values()) == 0:
            # every remaining vertex is isolated within the pool: take all
            weight = current_weight + sum(
                (g.weights[v] for v in avail), Fraction(0)
            )
            if weight > best_weight:
                best_weight = weight
                best_set = current + list(avail)
            return
        # branch on the vertex with most neighbors still available
        pivot = max(avail, key=lambda v: (degree[v], -v))
        rest = [v for v in avail if v != pivot]
        excluded = set(g.adjacency[pivot])
        branch([v for v in rest if v not in excluded],
               current + [pivot], current_weight + g.weights[pivot])
        branch(rest, current, current_weight)

    branch(pool, [], Fraction(0))
    return best_set, best_weight


def oracle_max_weight_independent_set(g: WeightedGraph, vertices=None,
                                      budget: int | None = None):
    """Exact MWIS of G[U] by branch and bound; returns (set, weight).

    The pool splits into connected components of the induced subgraph and
    each component is solved separately (MWIS is additive across them),
    with a shared node budget.
    """
    budget = _budget(budget)
    if vertices is None:
        vertices = range(g.n)
    pool = set(vertices)
    nodes = [0]
    best_set: list[int] = []
    best_weight = Fraction(0)

    seen: set[int] = set()
    for start in sorted(pool):
        if start in seen:
            continue
        component = [start]
        seen.add(start)
        queue = [start]
        while queue:
            u = queue.pop()
            for v in g.adjacency[u]:
                if v in pool and v not in seen:
                    seen.add(v)
                    component.append(v)
                    queue.append(v)
        part_set, part_weight = _mwis_component(g, sorted(component), budget,
                                                nodes)
        best_set.extend(part_set)
        best_weight = best_weight + part_weight
    return sorted(best_set), best_weight
