"""Exact and (1+3*eps)-approximate EQ1 colorings under arbitrary weights.

Three routes, all reductions to partition equitability:
  * eq1_coloring_distinct_weights: k-sized weight chunks, adjacent
    constant-weight chunks merged, exact factor <= 1;
  * eq1_coloring_sqrt: plain equipartition, valid once k*k >= 16*n*maxdeg;
  * eps_eq1_coloring: heaviest vertices into k-sized top parts, the rest
    bucketed by weight ratio with a small deferred set colored last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .certbounds import ceil_fraction, ln_bounds
from .core import Coloring, Rational, VertexPartition, WeightedGraph
from .errors import PreconditionViolated
from .extend import fill_up
from .partitioneq import equitable_for_multiples, partition_equitable_coloring
from .verify import compute_eta, eq1_factor


def _pad_with_dummies(g: WeightedGraph, pad: int) -> WeightedGraph:
    # isolated zero-weight vertices appended at indices n..n+pad-1
    return WeightedGraph(g.n + pad, g.edges(),
                         list(g.weights) + [Fraction(0)] * pad)


def _strip_dummies(c: Coloring, n: int) -> Coloring:
    return Coloring(c.k, [{v for v in cls if v < n} for cls in c.classes])


def _by_weight_desc(g: WeightedGraph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.weights[v], v))


def _equipartition_coloring(g: WeightedGraph, k: int,
                            stats: dict | None = None) -> Coloring:
    """Consecutive k-sized chunks of the weight-sorted vertices, padded with
    zero-weight dummies; exact EQ1 whenever k >= (4*ceil(n/k) + 2)*maxdeg."""
    if g.n == 0:
        return Coloring(k, [set() for _ in range(k)])
    if k >= g.n:
        classes = [set() for _ in range(k)]
        for v in range(g.n):
            classes[v].add(v)
        return Coloring(k, classes)
    pad = (-g.n) % k
    padded = _pad_with_dummies(g, pad)
    order = _by_weight_desc(padded)
    parts = [order[i:i + k] for i in range(0, len(order), k)]
    coloring = equitable_for_multiples(padded, VertexPartition(parts), k, stats)
    return _strip_dummies(coloring, g.n)


def eq1_coloring_sqrt(g: WeightedGraph, k: int,
                      stats: dict | None = None) -> Coloring:
    """Exact EQ1 k-coloring for any k with k*k >= 16*n*maxdeg."""
    delta = g.max_degree()
    if k * k < 16 * g.n * delta or k < 1:
        raise PreconditionViolated(
            f"need k^2 >= 16*n*maxdeg = {16 * g.n * delta}, got k={k}"
        )
    coloring = _equipartition_coloring(g, k, stats)
    report = eq1_factor(g, coloring)
    assert report.satisfies(1), f"exact EQ1 violated: {report}"
    return coloring


def eq1_coloring_distinct_weights(g: WeightedGraph, k: int,
                                  stats: dict | None = None) -> Coloring:
    """Exact EQ1 k-coloring when k >= (8d + 10)*maxdeg, d = number of
    distinct weights."""
    delta = g.max_degree()
    d = g.distinct_weight_count()
    if k < max((8 * d + 10) * delta, delta + 1):
        raise PreconditionViolated(
            f"need k >= (8d + 10)*maxdeg = {(8 * d + 10) * delta} "
            f"and k >= maxdeg + 1, got k={k}"
        )
    if k >= g.n:
        return _equipartition_coloring(g, k, stats)

    pad = (-g.n) % k
    padded = _pad_with_dummies(g, pad)
    order = _by_weight_desc(padded)
    chunks = [order[i:i + k] for i in range(0, len(order), k)]

    # merge adjacent chunks whose union is weight-constant; within the
    # sorted order it suffices to compare the first and last member
    merged: list[list[int]] = []
    for chunk in chunks:
        if merged and padded.weights[merged[-1][0]] == padded.weights[chunk[-1]]:
            merged[-1].extend(chunk)
        else:
            merged.append(chunk)

    dtilde = len(merged)
    assert dtilde <= 2 * (d + 1), f"merged part count {dtilde} > 2(d+1)"
    for j in range(0, dtilde - 2, 2):
        assert padded.weights[merged[j][0]] > padded.weights[merged[j + 2][0]], (
            "odd-position parts must carry distinct maximum weights"
        )

    coloring = equitable_for_multiples(padded, VertexPartition(merged), k, stats)
    coloring = _strip_dummies(coloring, g.n)
    report = eq1_factor(g, coloring)
    assert report.satisfies(1), f"exact EQ1 violated: {report}"
    return coloring


def bucket_index_of(weight: Rational, pivot: Rational, eps: Rational) -> int:
    """The unique j >= 1 with weight/pivot in ((1+eps)^-j, (1+eps)^-(j-1)].

    Exponential then binary search on exact rational powers, so the cost is
    polynomial in the bit size of the weights even when j is huge.
    """
    if not 0 < weight <= pivot:
        raise ValueError("need 0 < weight <= pivot")
    base = 1 + Fraction(eps)
    target = Fraction(pivot) / Fraction(weight)  # smallest j with base^j > target
    if target < base:
        return 1
    hi, power = 1, base
    while power <= target:
        hi *= 2
        power = power * power
    lo = hi // 2  # base^lo <= target < base^hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if base ** mid <= target:
            lo = mid
        else:
            hi = mid
    return hi


@dataclass
class BucketPlan:
    """Partition blueprint for the approximate route: top parts, weight-ratio
    buckets with k-divisible sizes, and the deferred set with its ledgers."""

    x: int
    y: int
    t_parts: list[list[int]]
    buckets: dict[int, list[int]]  # sparse: index j -> surviving vertices
    deferred: list[int]
    pivot: Rational
    w_def_multiple: Fraction = Fraction(0)  # weight deferred for divisibility
    w_def_due: dict[int, Fraction] = field(default_factory=dict)  # due to B_j


def _xy_parameters(eps: Fraction) -> tuple[int, int]:
    ln_hi = ln_bounds(1 / eps)[1]
    x = ceil_fraction(1 / eps ** 2)
    y = ceil_fraction((1 + eps) / eps * ln_hi + 1)
    return x, y


def build_bucket_plan(g: WeightedGraph, k: int, eps: Fraction) -> BucketPlan:
    """Split vertices into k-sized top parts, ratio buckets, and a deferred
    set; asserts both deferral-weight ledgers and the geometric-growth claim.
    Requires k*x < n so the pivot weight exists."""
    x, y = _xy_parameters(eps)
    if k * x >= g.n:
        raise PreconditionViolated("pivot undefined: k*x >= n")
    order = _by_weight_desc(g)
    t_parts = [order[i * k:(i + 1) * k] for i in range(x)]
    pivot = g.weights[order[k * x]]

    buckets: dict[int, list[int]] = {}
    for v in order[k * x:]:
        buckets.setdefault(bucket_index_of(g.weights[v], pivot, eps), []).append(v)

    plan = BucketPlan(x, y, t_parts, buckets, [], pivot)
    base = 1 + eps

    # divisibility pass: defer the lightest vertices of each bucket
    for j in sorted(buckets):
        spill = len(buckets[j]) % k
        if spill:
            plan.deferred.extend(buckets[j][-spill:])
            plan.w_def_multiple += g.weight_of(buckets[j][-spill:])
            del buckets[j][-spill:]
        if not buckets[j]:
            del buckets[j]
    # ledgers live in unnormalized units, hence the pivot factor
    assert plan.w_def_multiple <= k * base / eps * pivot, (
        "divisibility deferral ledger"
    )

    # geometric-growth pass, per residue collection of bucket indices
    for h in range(1, y + 1):
        indices = sorted(j for j in buckets if j % y == h % y)
        for pos, j in enumerate(indices):
            if j not in buckets:
                continue
            due = Fraction(0)
            for jj in indices[pos + 1:]:
                if jj not in buckets:
                    continue
                steps = (jj - j) // y
                if len(buckets[jj]) <= base ** steps * len(buckets[j]):
                    due += g.weight_of(buckets[jj])
                    plan.deferred.extend(buckets[jj])
                    del buckets[jj]
            if due:
                plan.w_def_due[j] = due
                cap = (len(buckets[j]) / base ** (j - 1)) * (eps / (1 - eps))
                assert due <= cap * pivot, f"per-bucket deferral ledger at {j}"
        # surviving sizes must now grow geometrically
        alive = [j for j in indices if j in buckets]
        for pos, j in enumerate(alive):
            total = sum(len(buckets[jj]) for jj in alive[:pos + 1])
            assert total <= (base / eps) * len(buckets[j]), "growth claim"
    return plan


def eps_eq1_coloring(g: WeightedGraph, k: int, eps,
                     stats: dict | None = None) -> Coloring:
    """(1 + 3*eps)-EQ1 k-coloring for eps in (0, 1/10] and
    k >= ceil((4(1+eps)^2/eps^2)(ln(1/eps) + 4)) * maxdeg."""
    eps = Fraction(eps)
    if not 0 < eps <= Fraction(1, 10):
        raise PreconditionViolated(f"need eps in (0, 1/10], got {eps}")
    delta = g.max_degree()
    ln_hi = ln_bounds(1 / eps)[1]
    k_min = ceil_fraction(4 * (1 + eps) ** 2 / eps ** 2 * (ln_hi + 4)) * delta
    if k < max(k_min, delta + 1):
        raise PreconditionViolated(
            f"need k >= {max(k_min, delta + 1)}, got k={k}"
        )

    if g.n * eps ** 2 < 2:
        return eq1_coloring_sqrt(g, k, stats)

    # the construction assumes positive weights; zero-weight vertices are
    # colored at the end and cannot change any class's residual weight
    positive = [v for v in range(g.n) if g.weights[v] > 0]
    sub, to_old = g.induced_subgraph(positive)

    x, _ = _xy_parameters(eps)
    if k * x >= sub.n:
        # pivot undefined: everything fits in top parts, use the chunk route
        partial = _equipartition_coloring(sub, k, stats)
    else:
        plan = build_bucket_plan(sub, k, eps)
        parts = plan.t_parts + [plan.buckets[j] for j in sorted(plan.buckets)]
        partition = VertexPartition(parts).sorted_by_size()
        eta = compute_eta(partition)
        assert eta <= ((1 + eps) / eps) ** 2 * (ln_hi + 2), "eta bound"
        partial = partition_equitable_coloring(sub, partition, k, stats)
        top_set = {v for part in plan.t_parts for v in part}
        for i in range(k):
            top_weight = sum(
                (sub.weights[v] for v in partial.classes[i] if v in top_set),
                Fraction(0),
            )
            assert top_weight >= plan.x * plan.pivot, "top-part weight floor"
        partial = fill_up(sub, partial, k)

    lifted = [{to_old[v] for v in cls} for cls in partial.classes]
    coloring = fill_up(g, Coloring(k, lifted), k)
    report = eq1_factor(g, coloring)
    assert report.satisfies(1 + 3 * eps), f"(1+3eps)-EQ1 violated: {report}"
    return coloring
