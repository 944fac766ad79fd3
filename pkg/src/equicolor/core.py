"""Graph, weight, coloring, and partition value types with exact arithmetic.

All weights are exact (``fractions.Fraction`` or the quadratic-surd numbers
from :mod:`equicolor.instances`); no algorithm in this package ever touches
floating point when deciding a comparison.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (or a bare integer) into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    """Serialize in lowest terms with an explicit denominator."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class WeightedGraph:
    """Undirected graph with sorted adjacency lists and exact vertex weights.

    Vertices are dense indices ``0..n-1``.  Adjacency is symmetric, with no
    self-loops and no parallel edges; violations raise ``ValueError``.
    Instances are immutable after construction and safe to share.
    """

    __slots__ = ("n", "adjacency", "weights")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], weights: Sequence):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        weights = tuple(weights)
        if len(weights) != n:
            raise ValueError(f"expected {n} weights, got {len(weights)}")
        for w in weights:
            if w < 0:
                raise ValueError("vertex weights must be nonnegative")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )
        self.weights = weights

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(len(a) for a in self.adjacency)

    def distinct_weight_count(self) -> int:
        distinct = []
        for w in self.weights:
            if all(w != seen for seen in distinct):
                distinct.append(w)
        return len(distinct)

    def weight_of(self, vertices: Iterable[int]):
        total = Fraction(0)
        for v in vertices:
            total = total + self.weights[v]
        return total

    def total_weight(self):
        return self.weight_of(range(self.n))

    def max_weight_of(self, vertices: Iterable[int]):
        """max-wt(S); ties broken by lowest index when a witness is needed."""
        vertices = list(vertices)
        if not vertices:
            raise ValueError("max-wt of empty set")
        best = None
        for v in sorted(vertices):
            if best is None or self.weights[v] > self.weights[best]:
                best = v
        return self.weights[best]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["WeightedGraph", list[int]]:
        """Subgraph on ``vertices``; returns it plus the new-to-old index map."""
        keep = sorted(set(vertices))
        index = {old: new for new, old in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self.adjacency[u]
            if u < v and v in index
        ]
        return WeightedGraph(len(keep), edges, [self.weights[v] for v in keep]), keep

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.edge_count()})"


class Coloring:
    """A family of ``k`` disjoint independent classes covering a vertex subset.

    A total coloring covers every vertex of its graph; a partial coloring
    covers a proper subset.  Both share this one type: ``covered`` records the
    vertex set the classes partition.
    """

    __slots__ = ("k", "classes", "assignment", "covered")

    def __init__(self, k: int, classes: Sequence[Iterable[int]]):
        if len(classes) != k:
            raise ValueError(f"expected {k} classes, got {len(classes)}")
        self.k = k
        self.classes: tuple[frozenset[int], ...] = tuple(frozenset(c) for c in classes)
        assignment: dict[int, int] = {}
        for i, cls in enumerate(self.classes):
            for v in cls:
                if v in assignment:
                    raise ValueError(f"vertex {v} appears in two classes")
                assignment[v] = i
        self.assignment = assignment
        self.covered = frozenset(assignment)

    @classmethod
    def from_classes(cls, graph: WeightedGraph, classes: Sequence[Iterable[int]],
                     k: int | None = None) -> "Coloring":
        """Build and validate against ``graph`` (independence of every class)."""
        coloring = cls(len(classes) if k is None else k, classes)
        for i, color_class in enumerate(coloring.classes):
            for u in color_class:
                for v in graph.adjacency[u]:
                    if v in color_class:
                        raise ValueError(f"class {i} contains edge ({u}, {v})")
        return coloring

    def is_total(self, graph: WeightedGraph) -> bool:
        return len(self.covered) == graph.n

    def class_weight(self, graph: WeightedGraph, i: int):
        return graph.weight_of(self.classes[i])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Coloring)
            and self.k == other.k
            and self.classes == other.classes
        )

    def __hash__(self) -> int:
        return hash((self.k, self.classes))

    def __repr__(self) -> str:
        sizes = [len(c) for c in self.classes]
        return f"Coloring(k={self.k}, sizes={sizes})"


PartialColoring = Coloring


class VertexPartition:
    """Ordered list of disjoint vertex parts; order is significant."""

    __slots__ = ("parts", "covered")

    def __init__(self, parts: Sequence[Iterable[int]]):
        self.parts: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(set(p))) for p in parts
        )
        seen: set[int] = set()
        for part in self.parts:
            for v in part:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two parts")
                seen.add(v)
        self.covered = frozenset(seen)

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def sorted_by_size(self) -> "VertexPartition":
        """Stable size-sorted view; part identity is preserved."""
        return VertexPartition(sorted(self.parts, key=len))

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"VertexPartition(sizes={self.sizes()})"


def degree_profile(g: WeightedGraph):
    """Return (max degree, distinct weight count, total weight)."""
    return g.max_degree(), g.distinct_weight_count(), g.total_weight()
