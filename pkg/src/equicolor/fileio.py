"""Line-oriented text formats for instances, partitions, and colorings.

All rationals are serialized in lowest terms and emission order is
canonical, so generate -> parse -> format round-trips byte-identically.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Coloring, VertexPartition, WeightedGraph, format_rational, parse_rational
from .errors import FormatError
from .instances import QuadSurd


def _format_weight(w) -> str:
    if isinstance(w, QuadSurd):
        return f"{format_rational(w.a)} + {format_rational(w.b)}r2"
    return format_rational(w)


def _parse_weight(tokens: list[str]):
    try:
        if len(tokens) == 1:
            return parse_rational(tokens[0])
        if len(tokens) == 3 and tokens[1] == "+" and tokens[2].endswith("r2"):
            return QuadSurd(parse_rational(tokens[0]),
                            parse_rational(tokens[2][:-2]))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad weight {' '.join(tokens)!r}: {exc}") from exc
    raise FormatError(f"bad weight {' '.join(tokens)!r}")


def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise FormatError(f"bad {what} {token!r}") from exc


def parse_instance(text: str) -> WeightedGraph:
    n = m = None
    weights: dict[int, object] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            if tokens[0] == "p":
                if n is not None or len(tokens) != 4 or tokens[1] != "wgraph":
                    raise FormatError("malformed or duplicate header")
                n = _int(tokens[2], "vertex count")
                m = _int(tokens[3], "edge count")
            elif tokens[0] == "v":
                if n is None:
                    raise FormatError("weight line before header")
                idx = _int(tokens[1], "vertex index")
                if not 0 <= idx < n or idx in weights:
                    raise FormatError(f"bad or repeated vertex index {idx}")
                weights[idx] = _parse_weight(tokens[2:])
            elif tokens[0] == "e":
                if n is None:
                    raise FormatError("edge line before header")
                edges.append((_int(tokens[1], "endpoint"),
                              _int(tokens[2], "endpoint")))
            else:
                raise FormatError(f"unknown record {tokens[0]!r}")
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        except IndexError:
            raise FormatError(f"line {lineno}: truncated record") from None
    if n is None:
        raise FormatError("missing header line")
    if len(weights) != n:
        raise FormatError(f"expected {n} weight lines, got {len(weights)}")
    if m != len(edges):
        raise FormatError(f"header promises {m} edges, got {len(edges)}")
    try:
        return WeightedGraph(n, edges, [weights[i] for i in range(n)])
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_instance(g: WeightedGraph) -> str:
    lines = [f"p wgraph {g.n} {g.edge_count()}"]
    lines.extend(f"v {i} {_format_weight(g.weights[i])}" for i in range(g.n))
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> VertexPartition:
    parts: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] != "part" or len(tokens) < 2:
            raise FormatError(f"line {lineno}: expected 'part <size> <v...>'")
        size = _int(tokens[1], "part size")
        members = [_int(t, "vertex") for t in tokens[2:]]
        if len(members) != size:
            raise FormatError(
                f"line {lineno}: size {size} but {len(members)} vertices"
            )
        parts.append(members)
    try:
        return VertexPartition(parts)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_partition(p: VertexPartition) -> str:
    lines = [
        "part {} {}".format(len(part), " ".join(str(v) for v in part)).rstrip()
        for part in p.parts
    ]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    k = None
    classes: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "k":
            if k is not None or len(tokens) != 2:
                raise FormatError(f"line {lineno}: malformed or duplicate k line")
            k = _int(tokens[1], "class count")
        elif tokens[0] == "c":
            if k is None:
                raise FormatError(f"line {lineno}: class line before k line")
            color = _int(tokens[1], "color")
            if not 0 <= color < k or color in classes:
                raise FormatError(f"line {lineno}: bad or repeated color {color}")
            classes[color] = [_int(t, "vertex") for t in tokens[2:]]
        else:
            raise FormatError(f"line {lineno}: unknown record {tokens[0]!r}")
    if k is None:
        raise FormatError("missing k line")
    try:
        return Coloring(k, [classes.get(i, []) for i in range(k)])
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_coloring(c: Coloring) -> str:
    lines = [f"k {c.k}"]
    for i in range(c.k):
        members = " ".join(str(v) for v in sorted(c.classes[i]))
        lines.append(f"c {i} {members}".rstrip())
    return "\n".join(lines) + "\n"
