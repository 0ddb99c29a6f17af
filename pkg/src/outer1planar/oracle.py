"""Brute-force ground truth at desk scale.

Exact r-dynamic chromatic numbers and list colorability by chronological
backtracking, outer-1-planarity recognition by searching cyclic orders,
maximality testing, and exhaustive enumeration of convex-position drawings.
Every operation carries an explicit size guard; nothing here is meant to
scale past it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .drawing import Drawing, Edge, interleave, iter_all_pairs, normalize_edge


class SizeLimitExceeded(ValueError):
    """Input is larger than the brute-force guard allows."""


@dataclass(frozen=True)
class AbstractGraph:
    """A simple graph with no drawing attached."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v or not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge ({u},{v}) for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges) -> "AbstractGraph":
        return AbstractGraph(n, frozenset(normalize_edge(u, v) for u, v in edges))

    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}


def underlying(d: Drawing) -> AbstractGraph:
    return AbstractGraph(d.n, d.edges)


def _solve_r_dynamic(
    g: AbstractGraph,
    r: int,
    lists: dict[int, frozenset[int]],
    symmetry_break: bool,
) -> dict[int, int] | None:
    """Find an r-dynamic coloring with colors from per-vertex lists, or None.

    Chronological backtracking over vertices in degree-descending order.
    Feasibility pruning per vertex: distinct colored-neighbor colors plus
    remaining uncolored neighbors must still be able to reach min(r, deg).
    """
    adj = g.adjacency()
    verts = sorted(range(1, g.n + 1), key=lambda v: (-len(adj[v]), v))
    need = {v: min(r, len(adj[v])) for v in verts}
    color: dict[int, int] = {}
    seen: dict[int, dict[int, int]] = {v: {} for v in verts}  # color -> multiplicity
    uncolored_nbrs = {v: len(adj[v]) for v in verts}
    palette_order = {v: sorted(lists[v]) for v in verts}

    def feasible(v: int) -> bool:
        return len(seen[v]) + uncolored_nbrs[v] >= need[v]

    def assign(i: int, max_used: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        options = palette_order[v]
        if symmetry_break:
            options = [c for c in options if c <= max_used + 1]
        for c in options:
            if any(color.get(w) == c for w in adj[v]):
                continue
            color[v] = c
            ok = True
            for w in adj[v]:
                uncolored_nbrs[w] -= 1
                seen[w][c] = seen[w].get(c, 0) + 1
                if not feasible(w):
                    ok = False
            if ok and feasible(v) and assign(i + 1, max(max_used, c)):
                return True
            for w in adj[v]:
                uncolored_nbrs[w] += 1
                if seen[w][c] == 1:
                    del seen[w][c]
                else:
                    seen[w][c] -= 1
            del color[v]
        return False

    if assign(0, 0):
        return dict(color)
    return None


def has_r_dynamic_k_coloring(g: AbstractGraph, r: int, k: int) -> bool:
    """Does g admit an r-dynamic coloring with colors 1..k?"""
    if g.n > 12:
        raise SizeLimitExceeded("r-dynamic search capped at n <= 12")
    lists = {v: frozenset(range(1, k + 1)) for v in range(1, g.n + 1)}
    return _solve_r_dynamic(g, r, lists, symmetry_break=True) is not None


def chromatic_r_dynamic(g: AbstractGraph, r: int, k_max: int) -> int | None:
    """Smallest k <= k_max with an r-dynamic k-coloring, else None."""
    if g.n > 12:
        raise SizeLimitExceeded("r-dynamic search capped at n <= 12")
    for k in range(1, k_max + 1):
        if has_r_dynamic_k_coloring(g, r, k):
            return k
    return None


def is_list_colorable(g: AbstractGraph, lists: dict[int, frozenset[int]], r: int) -> bool:
    """Exhaustive verdict: does g have an r-dynamic coloring from these lists?"""
    return solve_list_r_dynamic(g, lists, r) is not None


def solve_list_r_dynamic(
    g: AbstractGraph, lists: dict[int, frozenset[int]], r: int
) -> dict[int, int] | None:
    """Exhaustive search for an r-dynamic coloring from the lists; a witness or None."""
    if g.n > 12:
        raise SizeLimitExceeded("list coloring search capped at n <= 12")
    if set(lists) != set(range(1, g.n + 1)):
        raise ValueError("lists must cover exactly the vertices 1..n")
    norm = {v: frozenset(lists[v]) for v in lists}
    return _solve_r_dynamic(g, r, norm, symmetry_break=False)


def _pos_interleave(m: int, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """Interleaving of 0-based position pairs on a circle of m positions."""
    a, b = e
    c, d = f
    if a in (c, d) or b in (c, d):
        return False
    ba = (b - a) % m
    ca = (c - a) % m
    da = (d - a) % m
    return (0 < ca < ba) != (0 < da < ba)


def is_outer_1_planar(g: AbstractGraph) -> bool:
    """Does some cyclic vertex order make every edge's crossing degree <= 1?

    Searches orders with vertex 1 pinned at the first position and
    reflections quotiented, placing one vertex at a time.  Unplaced
    vertices always land in the single gap after the last placed position,
    so interleaving among placed chords never changes as the order grows;
    that makes incremental crossing counts sound and pruning aggressive.
    """
    if g.n > 9:
        raise SizeLimitExceeded("recognition capped at n <= 9")
    n = g.n
    if n <= 3:
        return True
    adj = g.adjacency()
    order = [1]
    pos = {1: 0}
    placed: list[tuple[int, int]] = []  # position pairs, 0-based
    cross: list[int] = []

    def backtrack(remaining: frozenset[int]) -> bool:
        if not remaining:
            return True
        k = len(order)
        for v in sorted(remaining):
            if k == n - 1 and order[1] > v:
                continue  # mirror image already tried
            new_edges = [(pos[w], k) for w in adj[v] if w in pos]
            m_now = k + 1
            old_len = len(placed)
            bumped: list[int] = []
            ok = True
            for e in new_edges:
                cnt = 0
                for idx in range(old_len):
                    if _pos_interleave(m_now, e, placed[idx]):
                        cross[idx] += 1
                        bumped.append(idx)
                        cnt += 1
                        if cross[idx] > 1:
                            ok = False
                placed.append(e)
                cross.append(cnt)
                if cnt > 1:
                    ok = False
                if not ok:
                    break
            if ok:
                order.append(v)
                pos[v] = k
                if backtrack(remaining - {v}):
                    return True
                order.pop()
                del pos[v]
            del placed[old_len:]
            del cross[old_len:]
            for idx in bumped:
                cross[idx] -= 1
        return False

    return backtrack(frozenset(range(2, n + 1)))


def is_maximal(d: Drawing) -> bool:
    """No edge can be added between existing vertices keeping outer-1-planarity."""
    if d.n > 9:
        raise SizeLimitExceeded("maximality check capped at n <= 9")
    g = underlying(d)
    for e in iter_all_pairs(d.n):
        if e in g.edges:
            continue
        if is_outer_1_planar(AbstractGraph(g.n, g.edges | {e})):
            return False
    return True


def enumerate_drawings(n: int, filter: str = "all") -> Iterator[Drawing]:
    """Every valid drawing on n convex-position vertices, in a fixed order.

    filter is one of 'all', 'connected', 'connected-min-deg-2'.  Output is
    per labeled drawing; use canonical_key to quotient by rotations and
    reflections.  Emitted drawings skip revalidation: the walk maintains
    the crossing-degree invariant itself.
    """
    if n > 8:
        raise SizeLimitExceeded("enumeration capped at n <= 8")
    if filter not in ("all", "connected", "connected-min-deg-2"):
        raise ValueError(f"unknown filter {filter!r}")
    pairs = list(iter_all_pairs(n))
    conflicts: list[list[int]] = [[] for _ in pairs]
    for i, e in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            if interleave(n, e, pairs[j]):
                conflicts[i].append(j)
                conflicts[j].append(i)

    chosen: list[int] = []
    cross = [0] * len(pairs)
    in_set = [False] * len(pairs)
    want_connected = filter != "all"
    want_min2 = filter == "connected-min-deg-2"

    def passes() -> Drawing | None:
        edges = frozenset(pairs[i] for i in chosen)
        if want_connected or want_min2:
            deg = [0] * (n + 1)
            parent = list(range(n + 1))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
                parent[find(u)] = find(v)
            if want_min2 and (n == 0 or min(deg[1:]) < 2):
                return None
            if len({find(v) for v in range(1, n + 1)}) != 1:
                return None
        return _trusted_drawing(n, edges)

    def walk(i: int) -> Iterator[Drawing]:
        if i == len(pairs):
            d = passes()
            if d is not None:
                yield d
            return
        yield from walk(i + 1)
        partners = [j for j in conflicts[i] if in_set[j]]
        if len(partners) <= 1 and all(cross[j] == 0 for j in partners):
            in_set[i] = True
            cross[i] = len(partners)
            for j in partners:
                cross[j] += 1
            chosen.append(i)
            yield from walk(i + 1)
            chosen.pop()
            for j in partners:
                cross[j] -= 1
            cross[i] = 0
            in_set[i] = False

    yield from walk(0)


def _trusted_drawing(n: int, edges: frozenset[Edge]) -> Drawing:
    # Construction path for the enumerator, which guarantees validity itself.
    d = object.__new__(Drawing)
    object.__setattr__(d, "n", n)
    object.__setattr__(d, "edges", edges)
    return d


def canonical_key(d: Drawing) -> tuple:
    """Minimum relabeling of the edge set over rotations and reflections."""
    n = d.n
    best = None
    for flip in (False, True):
        for rot in range(n):
            if flip:
                relabel = [0] + [((rot - (v - 1)) % n) + 1 for v in range(1, n + 1)]
            else:
                relabel = [0] + [((v - 1 + rot) % n) + 1 for v in range(1, n + 1)]
            key = tuple(
                sorted(normalize_edge(relabel[u], relabel[v]) for u, v in d.edges)
            )
            if best is None or key < best:
                best = key
    return (n, best)


def enumerate_drawings_deduped(n: int, filter: str = "all") -> Iterator[Drawing]:
    """Representatives of rotation/reflection classes of enumerate_drawings."""
    seen: set[tuple] = set()
    for d in enumerate_drawings(n, filter):
        key = canonical_key(d)
        if key not in seen:
            seen.add(key)
            yield d
