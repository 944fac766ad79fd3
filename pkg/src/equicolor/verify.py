"""Exact verification of properness, EQ1/EQX factors, and partition equitability."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Coloring, VertexPartition, WeightedGraph


@dataclass(frozen=True)
class Eq1Report:
    """Least approximation factor of a coloring, with the binding witness.

    ``infinite`` marks the positive-over-zero case; a pair with both sides
    zero is treated as satisfied and contributes nothing.
    """

    factor: object  # Fraction or QuadSurd; 0 when k <= 1 or all classes empty
    infinite: bool
    worst_pair: tuple[int, int] | None
    removed_vertex: int | None

    def satisfies(self, alpha) -> bool:
        return not self.infinite and self.factor <= alpha


def is_proper(g: WeightedGraph, c: Coloring) -> bool:
    """True iff no class contains an edge of ``g``."""
    for u in c.covered:
        cu = c.assignment[u]
        for v in g.adjacency[u]:
            if v > u and c.assignment.get(v) == cu:
                return False
    return True


def violating_edge(g: WeightedGraph, c: Coloring) -> tuple[int, int] | None:
    for u in sorted(c.covered):
        cu = c.assignment[u]
        for v in g.adjacency[u]:
            if v > u and c.assignment.get(v) == cu:
                return (u, v)
    return None


def _factor_report(g: WeightedGraph, c: Coloring, pick_max_weight: bool) -> Eq1Report:
    weights = [c.class_weight(g, i) for i in range(c.k)]
    nonempty = [i for i in range(c.k) if c.classes[i]]
    if not nonempty or c.k <= 1:
        return Eq1Report(Fraction(0), False, None, None)

    # leftovers after removing the optimal vertex of each nonempty class
    leftovers: dict[int, tuple[object, int]] = {}
    for i in nonempty:
        members = sorted(c.classes[i])
        pick = members[0]
        for v in members[1:]:
            better = g.weights[v] > g.weights[pick] if pick_max_weight else (
                g.weights[v] < g.weights[pick]
            )
            if better:
                pick = v
        leftovers[i] = (weights[i] - g.weights[pick], pick)

    # the binding denominator for class i is the smallest other class weight
    order = sorted(range(c.k), key=lambda j: (weights[j], j))
    min1, min2 = order[0], (order[1] if c.k > 1 else None)

    best = Eq1Report(Fraction(0), False, None, None)
    for i in nonempty:
        left, removed = leftovers[i]
        j = min1 if i != min1 else min2
        denom = weights[j]
        if denom == 0:
            if left == 0:
                continue
            return Eq1Report(Fraction(0), True, (i, j), removed)
        ratio = left / denom
        if best.worst_pair is None or ratio > best.factor:
            best = Eq1Report(ratio, False, (i, j), removed)
    if best.worst_pair is None:
        best = Eq1Report(Fraction(0), False, None, None)
    return best


def eq1_factor(g: WeightedGraph, c: Coloring) -> Eq1Report:
    """Least alpha for which ``c`` is alpha-EQ1; removal is the max-weight vertex."""
    return _factor_report(g, c, pick_max_weight=True)


def eqx_factor(g: WeightedGraph, c: Coloring) -> Eq1Report:
    """Least alpha for which the bound holds for every removable vertex.

    The binding removal is the min-weight vertex of each class, since it
    leaves the heaviest residual.
    """
    return _factor_report(g, c, pick_max_weight=False)


def check_partition_equitable(c: Coloring, p: VertexPartition, k: int) -> bool:
    """True iff every class-part intersection count is floor or ceil of |V_j|/k."""
    if c.covered != p.covered:
        raise ValueError("coloring must cover exactly the partition's vertices")
    for part in p.parts:
        lo, rem = divmod(len(part), k)
        hi = lo + (1 if rem else 0)
        counts = [0] * k
        for v in part:
            counts[c.assignment[v]] += 1
        if any(not (lo <= cnt <= hi) for cnt in counts):
            return False
    return True


def compute_eta(p: VertexPartition) -> Fraction:
    """max over prefixes of (cumulative part size) / (current part size)."""
    sizes = p.sizes()
    if not sizes:
        raise ValueError("partition has no parts")
    if any(s == 0 for s in sizes):
        raise ValueError("empty part")
    if any(sizes[i] > sizes[i + 1] for i in range(len(sizes) - 1)):
        raise ValueError("parts must be sorted nondecreasing by size")
    eta = Fraction(0)
    prefix = 0
    for s in sizes:
        prefix += s
        eta = max(eta, Fraction(prefix, s))
    return eta
