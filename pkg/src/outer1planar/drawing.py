"""Outer-1-plane drawings in convex position.

A drawing is a cyclic sequence of vertices 1..n (clockwise on the outer
boundary) together with an edge set.  Two edges cross exactly when their
endpoints interleave in the cyclic order, and a drawing is valid when every
edge is crossed at most once.  Everything downstream (configuration
matching, structure search, coloring) works on this representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]


class DrawingError(ValueError):
    """Base class for drawing construction problems."""


class DrawingFormatError(DrawingError):
    """Malformed drawing file (carries a line number in the message)."""


class InvalidDrawingError(DrawingError):
    """Structurally invalid drawing: loop, bad vertex, or crossing overload."""


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def interleave(n: int, e: Edge, f: Edge) -> bool:
    """True iff chords e and f strictly interleave in the cyclic order 1..n.

    Edges sharing an endpoint never interleave.  With the four endpoints
    distinct, e and f interleave exactly when one endpoint of f lies
    strictly inside the clockwise arc between the endpoints of e and the
    other lies outside.
    """
    a, b = e
    c, d = f
    if len({a, b, c, d}) < 4:
        return False
    ba = (b - a) % n
    ca = (c - a) % n
    da = (d - a) % n
    return (0 < ca < ba) != (0 < da < ba)


@dataclass(frozen=True)
class Drawing:
    """An outer-1-plane drawing: n boundary vertices plus an edge set.

    Vertices are the integers 1..n in clockwise boundary order.  Validation
    happens at construction: no loops, vertices in range, and every edge
    interleaves with at most one other edge.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidDrawingError("a drawing needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise InvalidDrawingError(f"loop at vertex {u}")
            if not (1 <= u < v <= self.n):
                raise InvalidDrawingError(f"edge ({u},{v}) out of range for n={self.n}")
        for e, count in self._crossing_counts().items():
            if count > 1:
                raise InvalidDrawingError(
                    f"edge {e} is crossed {count} times: not outer-1-plane in given order"
                )

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Drawing":
        return Drawing(n, frozenset(normalize_edge(u, v) for u, v in edges))

    def _crossing_counts(self) -> dict[Edge, int]:
        counts: dict[Edge, int] = {e: 0 for e in self.edges}
        edge_list = sorted(self.edges)
        for i, e in enumerate(edge_list):
            for f in edge_list[i + 1 :]:
                if interleave(self.n, e, f):
                    counts[e] += 1
                    counts[f] += 1
        return counts

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def degrees(self) -> dict[int, int]:
        return {v: len(self.adjacency[v]) for v in self.vertices}

    @cached_property
    def min_degree(self) -> int:
        return min(self.degrees.values())

    @cached_property
    def crossing_pairs(self) -> frozenset[tuple[Edge, Edge]]:
        pairs = set()
        edge_list = sorted(self.edges)
        for i, e in enumerate(edge_list):
            for f in edge_list[i + 1 :]:
                if interleave(self.n, e, f):
                    pairs.add((e, f))
        return frozenset(pairs)

    def crosses(self, e: Edge, f: Edge) -> bool:
        e = normalize_edge(*e)
        f = normalize_edge(*f)
        key = (e, f) if e < f else (f, e)
        return key in self.crossing_pairs

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        out = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                for w in self.adjacency[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(frozenset(comp))
        return out


@dataclass(frozen=True)
class Segment:
    """A clockwise stretch of boundary vertices, closed [i,j] or open (i,j)."""

    start: int
    end: int
    closed: bool = True

    def __post_init__(self) -> None:
        if not self.closed and self.start == self.end:
            raise ValueError("open segment needs distinct endpoints")


def segment_vertices(d: Drawing, s: Segment) -> list[int]:
    """Vertices of the segment, clockwise with wraparound modulo n."""
    out = [s.start]
    v = s.start
    while v != s.end:
        v = v % d.n + 1
        out.append(v)
    if not s.closed:
        out = out[1:-1]
    return out


def segment_kind(d: Drawing, s: Segment) -> str:
    """Classify the closed segment [start, end] as 'path', 'non-edge' or 'other'.

    The segment is a non-edge when end follows start on the boundary but the
    boundary edge between them is missing, and a path when every consecutive
    boundary edge along the segment is present.
    """
    if s.start == s.end:
        raise ValueError("segment_kind needs distinct endpoints")
    verts = segment_vertices(d, Segment(s.start, s.end, closed=True))
    if len(verts) == 2 and not d.has_edge(verts[0], verts[1]):
        return "non-edge"
    if all(d.has_edge(verts[k], verts[k + 1]) for k in range(len(verts) - 1)):
        return "path"
    return "other"


def degrees(d: Drawing) -> dict[int, int]:
    return dict(d.degrees)


def crossing_pairs(d: Drawing) -> set[tuple[Edge, Edge]]:
    return set(d.crossing_pairs)


def co_crosses(d: Drawing, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Decide whether e1 co-crosses e2.

    Writing e1 = {v_i, v_j} and e2 = {v_k, v_l}, the pair co-crosses when,
    after some rotation (either orientation of the circle), i < k < j < l
    with k = i+1 and j = l-1, the span v_i..v_l covers 4 or 5 boundary
    vertices, and the two short boundary edges v_i v_k and v_j v_l are
    present.  Implies that e1 and e2 cross.
    """
    e1 = normalize_edge(*e1)
    e2 = normalize_edge(*e2)
    if e1 not in d.edges or e2 not in d.edges:
        raise ValueError("co_crosses expects edges of the drawing")
    if not d.crosses(e1, e2):
        return False
    n = d.n
    for flip in (False, True):
        for rot in range(n):
            if flip:
                pos = {v: (rot - (v - 1)) % n for v in d.vertices}
            else:
                pos = {v: (v - 1 - rot) % n for v in d.vertices}
            inv = {p: v for v, p in pos.items()}
            i, j = sorted(pos[v] for v in e1)
            k, l = sorted(pos[v] for v in e2)
            if not (i < k < j < l):
                continue
            if k != i + 1 or j != l - 1:
                continue
            if not 4 <= (l - i + 1) <= 5:
                continue
            if d.has_edge(inv[i], inv[k]) and d.has_edge(inv[j], inv[l]):
                return True
    return False


def delete_vertices(d: Drawing, remove: Iterable[int]) -> Drawing:
    """Induced sub-drawing on the surviving vertices, cyclic order inherited.

    Survivors are relabeled 1..n' in their original clockwise order, which
    can only remove crossings, so the result is always a valid drawing.
    """
    sub, _ = delete_vertices_with_map(d, remove)
    return sub


def delete_vertices_with_map(
    d: Drawing, remove: Iterable[int]
) -> tuple[Drawing, dict[int, int]]:
    """Like delete_vertices but also returns the old->new vertex relabeling."""
    gone = set(remove)
    if not gone <= set(d.vertices):
        raise ValueError("can only delete existing vertices")
    keep = [v for v in d.vertices if v not in gone]
    if not keep:
        raise ValueError("deleting every vertex would leave an empty drawing")
    relabel = {old: i + 1 for i, old in enumerate(keep)}
    edges = frozenset(
        (relabel[u], relabel[v]) for u, v in d.edges if u not in gone and v not in gone
    )
    return Drawing(len(keep), edges), relabel


def parse_drawing(text: str) -> Drawing:
    """Parse the drawing file format.

    Comment lines start with '#'.  The first real line is "n <count>",
    every following line "e <u> <v>" with 1 <= u < v <= n.  Crossings are
    never listed; they are derived from the cyclic order.
    """
    n: int | None = None
    edges: set[Edge] = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise DrawingFormatError(f"line {ln}: expected 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise DrawingFormatError(f"line {ln}: vertex count is not an integer") from None
            if n < 1:
                raise DrawingFormatError(f"line {ln}: vertex count must be at least 1")
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise DrawingFormatError(f"line {ln}: expected 'e <u> <v>', got {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise DrawingFormatError(f"line {ln}: edge endpoints must be integers") from None
        if u == v:
            raise InvalidDrawingError(f"line {ln}: loop at vertex {u}")
        if not (1 <= u < v <= n):
            raise DrawingFormatError(
                f"line {ln}: edge ({u},{v}) must satisfy 1 <= u < v <= {n}"
            )
        e = (u, v)
        if e in edges:
            raise InvalidDrawingError(f"line {ln}: duplicate edge ({u},{v})")
        edges.add(e)
    if n is None:
        raise DrawingFormatError("line 1: missing 'n <count>' header")
    return Drawing(n, frozenset(edges))


def emit_drawing(d: Drawing) -> str:
    """Serialize back to the drawing file format, edges sorted lexicographically."""
    lines = [f"n {d.n}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(d.edges))
    return "\n".join(lines) + "\n"


def emit_dot(d: Drawing) -> str:
    """DOT text for the underlying graph (no geometry)."""
    lines = ["graph drawing {"]
    lines.extend(f"  {v};" for v in d.vertices)
    lines.extend(f"  {u} -- {v};" for u, v in sorted(d.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


def iter_all_pairs(n: int) -> Iterator[Edge]:
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            yield (u, v)
