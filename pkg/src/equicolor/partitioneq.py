"""Partition-equitable k-colorings via path augmentation.

Parts are processed in nondecreasing size order.  Small parts (at most k/2)
are placed one-per-class into the smallest classes via matching; large parts
get an arbitrary proper placement that is then rebalanced by relaying
vertices along shortest paths in the class move graph until every
class-part intersection count is floor or ceil of |V_t|/k.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Coloring, VertexPartition, WeightedGraph
from .errors import MatchingInfeasible, NoAugmentingPath, PreconditionViolated
from .extend import _match_into_classes
from .verify import compute_eta


class MoveGraph:
    """Directed class graph for one part: edge i -> j iff some vertex of
    C_i inside the part can move to C_j preserving independence."""

    def __init__(self, g: WeightedGraph, assignment: dict[int, int],
                 part, k: int):
        self.k = k
        self.members: list[list[int]] = [[] for _ in range(k)]
        for v in part:
            self.members[assignment[v]].append(v)
        for lst in self.members:
            lst.sort()
        # classes of colored neighbors; everything else is an admissible target
        self.blocked = {
            v: {assignment[u] for u in g.adjacency[v] if u in assignment}
            for v in part
        }
        self.max_blocked = max((len(b) for b in self.blocked.values()), default=0)

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return any(j not in self.blocked[v] for v in self.members[i])

    def edge_witness(self, i: int, j: int) -> int:
        for v in self.members[i]:
            if j not in self.blocked[v]:
                return v
        raise AssertionError(f"no witness for move graph edge {i}->{j}")


def _augment_once(g: WeightedGraph, class_sets, assignment, part, k,
                  counts) -> bool:
    """One relay along a shortest move-graph path; returns False at fixpoint.

    Strictly decreases sum of squared intersection counts.  Raises
    NoAugmentingPath if an over-full class cannot reach a smallest class.
    """
    low = min(counts)
    high = max(counts)
    if high <= low + 1:
        return False

    moves = MoveGraph(g, assignment, part, k)
    source = min(range(k), key=lambda i: (-counts[i], i))
    smallest = sorted(j for j in range(k) if counts[j] == low)

    # reverse BFS from the smallest classes; dist[i] = hops from i to them
    dist = {j: 0 for j in smallest}
    frontier = smallest
    while frontier and source not in dist:
        layer = dist[frontier[0]] + 1
        next_frontier = []
        # any vertex is blocked from at most maxdeg + 1 classes (its own
        # included), so a large frontier is reachable from every class
        # that still holds part vertices
        trivially_reachable = len(frontier) > moves.max_blocked + 1
        frontier_set = set(frontier)
        for i in range(k):
            if i in dist or not moves.members[i]:
                continue
            if trivially_reachable or any(
                moves.has_edge(i, j) for j in frontier_set
            ):
                dist[i] = layer
                next_frontier.append(i)
        frontier = sorted(next_frontier)
    if source not in dist:
        raise NoAugmentingPath(
            f"class {source} holds {counts[source]} part vertices but cannot "
            f"reach a smallest class"
        )

    # lexicographically smallest shortest path from the source
    path = [source]
    current = source
    while dist[current] > 0:
        step = dist[current] - 1
        for j in sorted(dist):
            if dist[j] == step and moves.has_edge(current, j):
                path.append(j)
                current = j
                break
        else:  # pragma: no cover - dist construction guarantees a successor
            raise AssertionError("shortest-path reconstruction failed")

    # pick all witnesses against the pre-move state, then apply at once
    relay = [
        (path[x], path[x + 1], moves.edge_witness(path[x], path[x + 1]))
        for x in range(len(path) - 1)
    ]
    for src, dst, v in relay:
        class_sets[src].discard(v)
        class_sets[dst].add(v)
        assignment[v] = dst
    counts[path[0]] -= 1
    counts[path[-1]] += 1
    return True


def partition_equitable_coloring(g: WeightedGraph, p: VertexPartition, k: int,
                                 stats: dict | None = None) -> Coloring:
    """Proper k-coloring of p's vertices with every |C_i ∩ V_j| equal to
    floor or ceil of |V_j|/k; requires k >= (4*eta + 2)*maxdeg and
    k >= maxdeg + 1."""
    delta = g.max_degree()
    eta = compute_eta(p)  # also validates sorted nonempty parts
    if k < delta + 1:
        raise PreconditionViolated(f"need k >= maxdeg + 1, got k={k}")
    if Fraction(k) < (4 * eta + 2) * delta:
        raise PreconditionViolated(
            f"need k >= (4*eta + 2)*maxdeg = {(4 * eta + 2) * delta}, got {k}"
        )

    class_sets: list[set[int]] = [set() for _ in range(k)]
    assignment: dict[int, int] = {}
    augmentations = 0

    for part in p.parts:
        part = list(part)
        if 2 * len(part) <= k:
            # one vertex per class into the smallest classes
            span = min(len(part) + delta, k)
            allowed = sorted(range(k), key=lambda i: (len(class_sets[i]), i))[:span]
            try:
                placed = _match_into_classes(g, class_sets, part, allowed)
            except MatchingInfeasible as exc:  # pragma: no cover
                raise NoAugmentingPath(str(exc)) from exc
            for v, i in placed.items():
                class_sets[i].add(v)
                assignment[v] = i
        else:
            counts = [0] * k
            for v in part:
                nbr_classes = {
                    assignment[u] for u in g.adjacency[v] if u in assignment
                }
                target = min(
                    (i for i in range(k) if i not in nbr_classes),
                    key=lambda i: (counts[i], i),
                )
                class_sets[target].add(v)
                assignment[v] = target
                counts[target] += 1
            limit = max(1, g.n) ** 3  # the squares potential caps the loop
            while _augment_once(g, class_sets, assignment, part, k, counts):
                augmentations += 1
                if augmentations > limit:  # pragma: no cover
                    raise AssertionError("augmentation bound exceeded")

    if stats is not None:
        stats["augmentations"] = stats.get("augmentations", 0) + augmentations
    return Coloring(k, class_sets)


def equitable_for_multiples(g: WeightedGraph, p: VertexPartition, k: int,
                            stats: dict | None = None) -> Coloring:
    """Exact intersections |C_i ∩ V_j| = |V_j|/k when k divides every part
    size and k >= (4d + 2)*maxdeg."""
    delta = g.max_degree()
    d = len(p.parts)
    for part in p.parts:
        if len(part) % k != 0:
            raise PreconditionViolated(
                f"part of size {len(part)} is not a multiple of k={k}"
            )
    if k < max((4 * d + 2) * delta, delta + 1):
        raise PreconditionViolated(
            f"need k >= (4d + 2)*maxdeg = {(4 * d + 2) * delta}, got {k}"
        )
    coloring = partition_equitable_coloring(g, p.sorted_by_size(), k, stats)
    for part in p.parts:
        want = len(part) // k
        tally = [0] * k
        for v in part:
            tally[coloring.assignment[v]] += 1
        assert all(c == want for c in tally), "exact intersection violated"
    return coloring
