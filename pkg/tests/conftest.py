"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import itertools
from functools import lru_cache

import pytest

from outer1planar import Drawing, enumerate_drawings
from outer1planar.catalog import ConfigPattern
from outer1planar.oracle import AbstractGraph, canonical_key


@lru_cache(maxsize=None)
def population(n: int, filter: str) -> tuple[Drawing, ...]:
    """Rotation/reflection class representatives of all drawings on n vertices.

    Matching, coloring and chromatic numbers are invariant under relabeling
    (tested separately), so per-class checks cover every labeled drawing.
    """
    seen: set[tuple] = set()
    reps: list[Drawing] = []
    for d in enumerate_drawings(n, filter):
        key = canonical_key(d)
        if key not in seen:
            seen.add(key)
            reps.append(d)
    return tuple(reps)


@pytest.fixture(scope="session")
def classes():
    return population


def naive_matches(d: Drawing, p: ConfigPattern) -> list[tuple[int, ...]]:
    """Brute-force matcher: every injective map, checked directly, then
    deduplicated by pattern automorphism.  Kept independent of the
    production matcher's ordering and pruning."""
    labels = p.labels
    autos = p.automorphisms()
    idx = {l: i for i, l in enumerate(labels)}
    found = set()
    for perm in itertools.permutations(d.vertices, len(labels)):
        amap = dict(zip(labels, perm))
        if any(not p.roles[l].admits(d.degrees[amap[l]]) for l in labels):
            continue
        if any(not d.has_edge(amap[a], amap[b]) for a, b in p.edges):
            continue
        tup = tuple(amap[l] for l in labels)
        orbit = min(tuple(tup[idx[s[l]]] for l in labels) for s in autos)
        found.add(orbit)
    return sorted(found)


def plain_chromatic(g: AbstractGraph) -> int:
    """Standalone proper-coloring backtracker (no dynamic condition)."""
    if g.n == 0:
        return 0
    adj = g.adjacency()
    verts = sorted(range(1, g.n + 1), key=lambda v: -len(adj[v]))
    for k in range(1, g.n + 1):
        colors: dict[int, int] = {}

        def ok(i: int, max_used: int) -> bool:
            if i == len(verts):
                return True
            v = verts[i]
            for c in range(1, min(k, max_used + 1) + 1):
                if all(colors.get(w) != c for w in adj[v]):
                    colors[v] = c
                    if ok(i + 1, max(max_used, c)):
                        return True
                    del colors[v]
            return False

        if ok(0, 0):
            return k
    return g.n


def brute_crossing_pairs(d: Drawing) -> set:
    """Independent pairwise interleaving scan."""
    out = set()
    edges = sorted(d.edges)
    n = d.n
    for i, (a, b) in enumerate(edges):
        for c, e in edges[i + 1 :]:
            if len({a, b, c, e}) < 4:
                continue
            ba = (b - a) % n
            ca = (c - a) % n
            da = (e - a) % n
            if (0 < ca < ba) != (0 < da < ba):
                out.add(((a, b), (c, e)))
    return out


# Engineered hosts that drive the deeper reduction kinds end to end.

def double_g10() -> Drawing:
    a = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 4), (2, 6)]
    b = [(7, 8), (8, 9), (9, 10), (10, 11), (11, 12), (7, 10), (8, 12)]
    return Drawing.from_edges(12, a + b + [(6, 7), (12, 1)])


def double_g11() -> Drawing:
    a = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 5), (3, 7)]
    b = [(8, 9), (9, 10), (10, 11), (11, 12), (12, 13), (13, 14), (8, 12), (10, 14)]
    return Drawing.from_edges(14, a + b + [(7, 8), (14, 1)])


def g3_flip_host() -> Drawing:
    """Contains the 3rd configuration only with x on the degree-3 side."""
    return Drawing.from_edges(
        8,
        [(1, 2), (2, 4), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1), (4, 6), (5, 7)],
    )
