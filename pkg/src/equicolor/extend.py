"""Coloring-extension subroutines shared by all main algorithms.

Two operations: place a batch of new vertices one-per-class via bipartite
matching, and fill up a partial coloring with all remaining vertices in
weight-bounded chunks.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Coloring, WeightedGraph
from .errors import MatchingInfeasible, PreconditionViolated


def _neighbors(g: WeightedGraph, v: int):
    # indices >= g.n are virtual zero-weight dummies with no edges
    return g.adjacency[v] if v < g.n else ()


def _weight(g: WeightedGraph, v: int):
    return g.weights[v] if v < g.n else Fraction(0)


def _match_into_classes(g, class_sets, new_vertices, allowed):
    """Assign each new vertex to a distinct compatible class (Kuhn matching).

    Classes are tried lighter-first (ties by index) so the augmentation
    order, and hence the result, is deterministic.  Returns
    {vertex: class index}; raises MatchingInfeasible if no perfect
    assignment of the new vertices exists.
    """
    def set_weight(i):
        return sum((_weight(g, v) for v in class_sets[i]), Fraction(0))

    preference = sorted(allowed, key=lambda i: (set_weight(i), i))
    compatible = {}
    for v in new_vertices:
        nbrs = set(_neighbors(g, v))
        compatible[v] = [i for i in preference if not (nbrs & class_sets[i])]

    matched_class: dict[int, int] = {}  # class -> vertex
    assignment: dict[int, int] = {}

    def try_augment(root):
        # iterative DFS: recursion depth would otherwise scale with k
        visited: set[int] = set()
        stack = [[root, iter(compatible[root]), -1]]
        while stack:
            frame = stack[-1]
            descended = False
            for i in frame[1]:
                if i in visited:
                    continue
                visited.add(i)
                frame[2] = i
                if i not in matched_class:
                    for fr in reversed(stack):
                        matched_class[fr[2]] = fr[0]
                        assignment[fr[0]] = fr[2]
                    return True
                holder = matched_class[i]
                stack.append([holder, iter(compatible[holder]), -1])
                descended = True
                break
            if not descended:
                stack.pop()
        return False

    for v in sorted(new_vertices):
        if not try_augment(v):
            raise MatchingInfeasible(
                f"vertex {v} cannot be matched to any allowed class"
            )
    return assignment


def extend_one_per_class(g: WeightedGraph, c: Coloring, new_vertices, k: int,
                         allowed_classes=None) -> Coloring:
    """Extend ``c`` so each class gains at most one vertex of ``new_vertices``.

    Existence is guaranteed whenever ``|new_vertices| <= |allowed| - maxdeg``:
    every new vertex is compatible with all but at most maxdeg classes, so
    Hall's condition holds.  A failed matching therefore signals a violated
    precondition (or an adjacency bug) and raises MatchingInfeasible.
    """
    new_vertices = sorted(set(new_vertices))
    if c.k != k:
        raise ValueError("coloring has wrong number of classes")
    overlap = set(new_vertices) & c.covered
    if overlap:
        raise ValueError(f"vertices already colored: {sorted(overlap)}")
    if not new_vertices:
        return c
    allowed = sorted(allowed_classes) if allowed_classes is not None else list(range(k))
    class_sets = [set(cls) for cls in c.classes]
    assignment = _match_into_classes(g, class_sets, new_vertices, allowed)
    for v, i in assignment.items():
        class_sets[i].add(v)
    return Coloring(k, class_sets)


def fill_up(g: WeightedGraph, c: Coloring, k: int) -> Coloring:
    """Complete ``c`` to a total coloring with the per-class weight bound
    w(C_i \\ C'_i) - max-wt(C_i \\ C'_i) <= w(uncolored) / (k - maxdeg).

    Uncolored vertices are processed in nonincreasing weight order, padded
    with virtual zero-weight isolated dummies until (k - maxdeg) divides the
    count, and placed chunk by chunk via one-per-class extension.
    """
    delta = g.max_degree()
    if k < delta + 1:
        raise PreconditionViolated(f"fill_up requires k >= maxdeg + 1 (k={k})")
    uncolored = sorted(set(range(g.n)) - c.covered)
    if not uncolored:
        return c
    uncolored.sort(key=lambda v: (-g.weights[v], v))
    chunk_size = k - delta
    pad = (-len(uncolored)) % chunk_size
    uncolored.extend(range(g.n, g.n + pad))  # dummies, never materialized

    class_sets = [set(cls) for cls in c.classes]
    allowed = list(range(k))
    for start in range(0, len(uncolored), chunk_size):
        chunk = uncolored[start:start + chunk_size]
        assignment = _match_into_classes(g, class_sets, chunk, allowed)
        for v, i in assignment.items():
            class_sets[i].add(v)
    stripped = [{v for v in s if v < g.n} for s in class_sets]
    return Coloring(k, stripped)
