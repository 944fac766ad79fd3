"""(1 + 7*eps)-EQ1 colorings when no single vertex is heavy.

Any proper coloring with few classes can be greedily split into independent
chunks of near-uniform weight; keeping k of them and filling up the rest
yields the guarantee, provided max-wt(V) <= eps*w(V)/k.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Coloring, WeightedGraph
from .errors import PreconditionViolated
from .extend import fill_up
from .verify import eq1_factor, is_proper


def greedy_coloring(g: WeightedGraph) -> Coloring:
    """First-fit proper coloring in index order; uses at most maxdeg + 1 colors."""
    assignment: dict[int, int] = {}
    used = 1
    for v in range(g.n):
        taken = {assignment[u] for u in g.adjacency[v] if u in assignment}
        color = min(i for i in range(used + 1) if i not in taken)
        assignment[v] = color
        used = max(used, color + 1)
    classes = [set() for _ in range(used)]
    for v, i in assignment.items():
        classes[i].add(v)
    return Coloring(used, classes)


def chromatic_initial_coloring(g: WeightedGraph, budget: int | None = None) -> Coloring:
    """Proper coloring with exactly as many classes as the chromatic number,
    found by exhaustive search; desk-scale only."""
    from .instances import _enumerate_colorings, oracle_chromatic_number

    chi = oracle_chromatic_number(g, budget)
    if g.n == 0:
        return Coloring(chi, [set() for _ in range(chi)])
    for assignment, _used in _enumerate_colorings(g, chi, 10 ** 7):
        classes: list[list[int]] = [[] for _ in range(chi)]
        for v, color in enumerate(assignment):
            classes[color].append(v)
        return Coloring(chi, classes)
    raise AssertionError("no proper coloring at the chromatic number")


def split_classes(g: WeightedGraph, c: Coloring, k: int, eps):
    """Split every class of ``c`` into minimal chunks of weight at least
    (1-2*eps)*w(V)/k, scanning members heaviest-first.

    Returns a list of (chunk, witness) pairs where the witness is the
    last-added vertex: dropping it takes the chunk below the target, and the
    chunk's total stays below (1-eps)*w(V)/k.  Per-class leftover weight is
    below the target, hence at most w(V)/k.
    """
    eps = Fraction(eps)
    total = g.total_weight()
    cap = eps * total / k
    heaviest = max((g.weights[v] for v in range(g.n)), default=Fraction(0))
    if heaviest > cap:
        raise PreconditionViolated(
            f"need max-wt <= eps*w(V)/k = {cap}, got {heaviest}"
        )
    lo = (1 - 2 * eps) * total / k
    hi = (1 - eps) * total / k

    chunks: list[tuple[list[int], int]] = []
    for cls in c.classes:
        members = sorted(cls, key=lambda v: (-g.weights[v], v))
        current: list[int] = []
        weight = Fraction(0)
        for v in members:
            current.append(v)
            weight = weight + g.weights[v]
            if weight >= lo:
                assert weight <= hi, "chunk exceeded the weight ceiling"
                assert weight - g.weights[v] < lo, "chunk not minimal"
                chunks.append((current, v))
                current = []
                weight = Fraction(0)
        assert weight < lo, "leftover must stay below the chunk target"
    return chunks


def low_max_wt_eq1(g: WeightedGraph, k: int, eps, initial: Coloring,
                   stats: dict | None = None) -> Coloring:
    """(1 + 7*eps)-EQ1 k-coloring from any proper initial coloring with
    kappa classes, for eps in (0, 1/10], k >= max(kappa/eps, 2*maxdeg), and
    max-wt(V) <= eps*w(V)/k."""
    eps = Fraction(eps)
    if not 0 < eps <= Fraction(1, 10):
        raise PreconditionViolated(f"need eps in (0, 1/10], got {eps}")
    delta = g.max_degree()
    kappa = initial.k
    if k < kappa / eps or k < max(2 * delta, delta + 1):
        raise PreconditionViolated(
            f"need k >= max(kappa/eps, 2*maxdeg) = "
            f"max({kappa / eps}, {2 * delta}), got k={k}"
        )
    if initial.covered != frozenset(range(g.n)) or not is_proper(g, initial):
        raise PreconditionViolated("initial coloring must be total and proper")

    total = g.total_weight()
    if total == 0:
        coloring = fill_up(g, Coloring(k, [set() for _ in range(k)]), k)
    else:
        chunks = split_classes(g, c=initial, k=k, eps=eps)
        assert len(chunks) >= k, "splitting must produce at least k chunks"
        # keep the k heaviest chunks; any k would do, these minimize fill-up
        chunks.sort(key=lambda item: (-g.weight_of(item[0]), item[0]))
        kept = chunks[:k]
        kept_weight = sum((g.weight_of(ch) for ch, _ in kept), Fraction(0))
        assert total - kept_weight <= 2 * eps * total, "uncolored weight cap"

        coloring = fill_up(g, Coloring(k, [set(ch) for ch, _ in kept]), k)
        bound = ((1 - 2 * eps) / k + 2 * eps / (k - delta) + eps / k) * total
        for i, (_, witness) in enumerate(kept):
            residual = coloring.class_weight(g, i) - g.weights[witness]
            assert residual <= bound, f"residual bound violated for class {i}"

    report = eq1_factor(g, coloring)
    assert report.satisfies(1 + 7 * eps), f"(1+7eps)-EQ1 violated: {report}"
    return coloring
