"""List 3-dynamic coloring by reduce-and-extend, plus the generic verifier.

The engine peels one reducible shape at a time, colors the rest
recursively, and extends by the shape's local rule: each deleted vertex
gets the smallest list color outside a small forbidden set assembled from
its surroundings.  The one exception is the 11th configuration, whose rule
has a recoloring branch for the rainbow worst case.  Every extension is
verified; if a rule ever leaves a violation, a bounded exhaustive repair
over the shape's vertices runs before giving up.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

from .drawing import Drawing, delete_vertices_with_map
from .structure import ReductionStep, find_reduction

logger = logging.getLogger("outer1planar.coloring")

Coloring = dict[int, int]
ListAssignment = dict[int, frozenset[int]]


class ColoringError(RuntimeError):
    pass


class ExtensionFailure(ColoringError):
    """A local rule (and the bounded repair) failed: bad input or a bug."""


class ListTooSmall(ValueError):
    """The main algorithm needs six colors in every list."""


@dataclass(frozen=True)
class Violation:
    kind: str  # "proper" | "dynamic" | "missing-color"
    vertex: int | None = None
    edge: tuple[int, int] | None = None
    detail: str = ""


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)


def verify_dynamic(d: Drawing, colors: Coloring, r: int) -> Verdict:
    """Check that colors is a proper coloring where every vertex sees at
    least min(r, deg) distinct colors on its neighborhood."""
    violations: list[Violation] = []
    for v in d.vertices:
        if v not in colors:
            violations.append(Violation("missing-color", vertex=v, detail="uncolored vertex"))
    if violations:
        return Verdict(False, tuple(violations))
    for u, v in sorted(d.edges):
        if colors[u] == colors[v]:
            violations.append(
                Violation("proper", edge=(u, v), detail=f"both endpoints colored {colors[u]}")
            )
    for v in d.vertices:
        need = min(r, d.degrees[v])
        got = len({colors[w] for w in d.adjacency[v]})
        if got < need:
            violations.append(
                Violation(
                    "dynamic",
                    vertex=v,
                    detail=f"neighbors show {got} colors, need {need}",
                )
            )
    return Verdict(not violations, tuple(violations))


def uniform_lists(d: Drawing, k: int) -> ListAssignment:
    return {v: frozenset(range(1, k + 1)) for v in d.vertices}


def parse_lists(text: str) -> ListAssignment:
    """Parse the list-assignment file: lines "l <v> <c1> <c2> ..."."""
    lists: ListAssignment = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "l" or len(parts) < 2:
            raise ValueError(f"line {ln}: expected 'l <v> <colors...>', got {line!r}")
        try:
            v = int(parts[1])
            colors = [int(c) for c in parts[2:]]
        except ValueError:
            raise ValueError(f"line {ln}: non-integer token") from None
        if v in lists:
            raise ValueError(f"line {ln}: duplicate list for vertex {v}")
        lists[v] = frozenset(colors)
    return lists


def coloring_to_json(colors: Coloring, r: int, valid: bool) -> str:
    payload = {
        "colors": {str(v): colors[v] for v in sorted(colors)},
        "valid": valid,
        "r": r,
    }
    return json.dumps(payload, sort_keys=True)


def parse_coloring_json(text: str) -> Coloring:
    data = json.loads(text)
    return {int(v): int(c) for v, c in data["colors"].items()}


def color_list_3_dynamic(d: Drawing, lists: ListAssignment) -> Coloring:
    """A 3-dynamic coloring of d choosing each vertex's color from its list.

    Requires every list to have at least six colors; guaranteed to succeed
    on valid drawings.  The result is re-verified at every recursion level.
    """
    if set(lists) < set(d.vertices):
        raise ListTooSmall("every vertex needs a list")
    for v in d.vertices:
        if len(lists[v]) < 6:
            raise ListTooSmall(f"list of vertex {v} has fewer than 6 colors")
    return _color(d, lists)


def _color(d: Drawing, lists: ListAssignment) -> Coloring:
    step = find_reduction(d)
    if len(step.deleted) == d.n:
        partial: Coloring = {}
    else:
        sub, relabel = delete_vertices_with_map(d, step.deleted)
        sub_lists = {new: lists[old] for old, new in relabel.items()}
        sub_colors = _color(sub, sub_lists)
        inverse = {new: old for old, new in relabel.items()}
        partial = {inverse[nv]: c for nv, c in sub_colors.items()}
    colors = extend_step(d, step, partial, lists)
    verdict = verify_dynamic(d, colors, 3)
    if not verdict.valid:
        raise ExtensionFailure(
            f"extension for {step.kind} left violations: {verdict.violations[:3]}"
        )
    bad = [v for v in d.vertices if colors[v] not in lists[v]]
    if bad:
        raise ExtensionFailure(f"colors off-list at {bad}")
    return colors


def _pick(lists: ListAssignment, v: int, forbidden: set[int]) -> int:
    for c in sorted(lists[v]):
        if c not in forbidden:
            return c
    raise ExtensionFailure(f"list of vertex {v} exhausted by {sorted(forbidden)}")


def extend_step(
    d: Drawing, step: ReductionStep, partial: Coloring, lists: ListAssignment
) -> Coloring:
    """Extend a valid coloring of d minus step.deleted to all of d.

    Implements the per-shape rules; outside the rainbow branch of the 11th
    configuration only deleted vertices receive colors.  If the literal
    rule leaves a violation (possible only off the rules' intended cases),
    a bounded exhaustive repair over the shape's vertices takes over.
    """
    colors = dict(partial)
    handler = {
        "P1-pendant": _extend_p1,
        "P2-adjacent-deg2": _extend_p2,
        "P3-triangle-deg2": _extend_p3,
        "P4-G3": _extend_g3,
        "P5-G6": _extend_g6,
        "P6-G7": _extend_g7,
        "P7-G8": _extend_g8,
        "P8-G9": _extend_g9,
        "P9-G10": _extend_g10,
        "P10-G11": _extend_g11,
    }[step.kind]
    try:
        handler(d, step.anchors, colors, lists)
        rule_failed = not verify_dynamic(d, colors, 3).valid
    except ExtensionFailure:
        rule_failed = True
    if rule_failed:
        logger.warning("rule for %s failed; running bounded repair", step.kind)
        repaired = _repair(d, step, partial, lists)
        if repaired is None:
            raise ExtensionFailure(f"bounded repair failed for {step.kind}")
        return repaired
    return colors


def _colors_of(d: Drawing, colors: Coloring, vs) -> set[int]:
    return {colors[w] for w in vs if w in colors}


def _extend_p1(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    u = a["u"]
    forbidden: set[int] = set()
    if "v" in a:
        v = a["v"]
        forbidden = {colors[v]}
        if d.degrees[v] <= 3:
            forbidden |= _colors_of(d, colors, d.adjacency[v] - {u})
    colors[u] = _pick(lists, u, forbidden)


def _extend_p2(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    u, v, x, y = a["u"], a["v"], a["x"], a["y"]
    if x == y:
        # both endpoints hang off the same vertex (a triangle with two
        # degree-2 corners); its neighborhood must still end up colorful
        shared = _colors_of(d, colors, d.adjacency[x] - {u, v})
        fu = {colors[x]} | (shared if d.degrees[x] <= 4 else set())
        colors[u] = _pick(lists, u, fu)
        fv = {colors[x], colors[u]} | (shared if d.degrees[x] <= 3 else set())
        colors[v] = _pick(lists, v, fv)
        return
    fu = {colors[x], colors[y]}
    if d.degrees[x] <= 3:
        fu |= _colors_of(d, colors, d.adjacency[x] - {u, v})
    colors[u] = _pick(lists, u, fu)
    fv = {colors[x], colors[u], colors[y]}
    if d.degrees[y] <= 3:
        fv |= _colors_of(d, colors, d.adjacency[y] - {u, v})
    colors[v] = _pick(lists, v, fv)


def _extend_p3(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    u, x, y = a["u"], a["x"], a["y"]
    forbidden = {colors[x], colors[y]}
    if d.degrees[x] == 3:
        forbidden.add(colors[a["x1"]])
    if d.degrees[y] == 3:
        forbidden.add(colors[a["y1"]])
    colors[u] = _pick(lists, u, forbidden)


def _extend_g3(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    dx, dy = d.degrees[a["x"]], d.degrees[a["y"]]
    forbidden = {colors[a["x"]], colors[a["y"]]}
    if dx >= 4 and dy >= 4:
        pass
    elif dx >= 4 and dy == 3:
        forbidden |= {colors[a["v"]], colors[a["y1"]]}
    else:
        forbidden |= {colors[a["x1"]], colors[a["y1"]], colors[a["v"]]}
    colors[a["u"]] = _pick(lists, a["u"], forbidden)


def _extend_g6(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    dx, dy = d.degrees[a["x"]], d.degrees[a["y"]]
    forbidden = {colors[a["x"]], colors[a["y"]], colors[a["v"]]}
    if dx >= 4 and dy == 3:
        forbidden.add(colors[a["y1"]])
    elif not (dx >= 4 and dy >= 4):
        forbidden |= {colors[a["x1"]], colors[a["y1"]]}
    colors[a["u"]] = _pick(lists, a["u"], forbidden)


def _extend_g7(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    dx, dy = d.degrees[a["x"]], d.degrees[a["y"]]
    fv = {colors[a["x"]], colors[a["y"]], colors[a["w"]]}
    if dx >= 4 and dy == 3:
        fv.add(colors[a["y1"]])
    elif not (dx >= 4 and dy >= 4):
        fv |= {colors[a["x1"]], colors[a["y1"]]}
    colors[a["v"]] = _pick(lists, a["v"], fv)
    fu = {colors[a["x"]], colors[a["y"]], colors[a["w"]], colors[a["v"]]}
    colors[a["u"]] = _pick(lists, a["u"], fu)


def _extend_g8(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    dx, dy = d.degrees[a["x"]], d.degrees[a["y"]]
    fw = {colors[a["x"]], colors[a["y"]], colors[a["v"]]}
    if dy == 3:
        fw.add(colors[a["y1"]])
    colors[a["w"]] = _pick(lists, a["w"], fw)
    fu = {colors[a["x"]], colors[a["y"]], colors[a["w"]], colors[a["v"]]}
    if dx == 3:
        fu.add(colors[a["x1"]])
    colors[a["u"]] = _pick(lists, a["u"], fu)


def _extend_g9(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    dx, dy = d.degrees[a["x"]], d.degrees[a["y"]]
    if dx >= 4:
        fw = {colors[a["x"]], colors[a["y"]], colors[a["v"]], colors[a["z"]]}
        if dy == 3:
            fw.add(colors[a["y1"]])
        colors[a["w"]] = _pick(lists, a["w"], fw)
        fu = {colors[a["x"]], colors[a["y"]], colors[a["w"]], colors[a["v"]]}
    else:
        fw = {
            colors[a["x"]],
            colors[a["y"]],
            colors[a["v"]],
            colors[a["z"]],
            colors[a["y1"]],
        }
        colors[a["w"]] = _pick(lists, a["w"], fw)
        fu = {
            colors[a["x"]],
            colors[a["y"]],
            colors[a["w"]],
            colors[a["v"]],
            colors[a["x1"]],
        }
    colors[a["u"]] = _pick(lists, a["u"], fu)


def _extend_g10(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    dy = d.degrees[a["y"]]
    fw = {colors[a["x"]], colors[a["y"]], colors[a["z"]], colors[a["v"]]}
    if dy == 3:
        fw.add(colors[a["y1"]])
    colors[a["w"]] = _pick(lists, a["w"], fw)
    fu = {
        colors[a["x"]],
        colors[a["y"]],
        colors[a["w"]],
        colors[a["v"]],
        colors[a["z"]],
    }
    colors[a["u"]] = _pick(lists, a["u"], fu)


def _extend_g11(d: Drawing, a: dict[str, int], colors: Coloring, lists: ListAssignment) -> None:
    dx, dy = d.degrees[a["x"]], d.degrees[a["y"]]
    cx, cy = colors[a["x"]], colors[a["y"]]
    cz, cw = colors[a["z"]], colors[a["w"]]
    if dx >= 4 and dy >= 4:
        colors[a["u"]] = _pick(lists, a["u"], {cx, cy, cz, cw})
        colors[a["v"]] = _pick(lists, a["v"], {cx, cy, colors[a["u"]], cw})
        colors[a["a"]] = _pick(lists, a["a"], {cx, cy, colors[a["u"]], colors[a["v"]]})
        return
    if dx >= 4 and dy == 3:
        cy1 = colors[a["y1"]]
        colors[a["u"]] = _pick(lists, a["u"], {cx, cy, cz, cw})
        colors[a["a"]] = _pick(lists, a["a"], {cw, cy, cy1, colors[a["u"]], cx})
        colors[a["v"]] = _pick(
            lists, a["v"], {cx, cy, colors[a["u"]], cw, colors[a["a"]]}
        )
        return
    # both degree 3, with the rainbow worst case and its recoloring branch
    cx1, cy1 = colors[a["x1"]], colors[a["y1"]]
    colors[a["v"]] = _pick(lists, a["v"], {cx, cx1, cz, cw, cy})
    colors[a["a"]] = _pick(lists, a["a"], {colors[a["v"]], cy, cy1, cw, cx})
    cv, ca = colors[a["v"]], colors[a["a"]]
    rest = sorted(set(lists[a["u"]]) - {cx, cz, cw, cv, ca, cy})
    if rest:
        colors[a["u"]] = rest[0]
        return
    logger.debug("rainbow case at configuration 11; trying recolorings")
    z_options = sorted(set(lists[a["z"]]) - {cx, cz, cw, cv, cy, cx1})
    if z_options:
        colors[a["u"]] = cz
        colors[a["z"]] = z_options[0]
        return
    a_options = sorted(set(lists[a["a"]]) - {cx, cw, cv, ca, cy, cy1})
    if a_options:
        colors[a["u"]] = ca
        colors[a["a"]] = a_options[0]
        return
    # the difficult case: both short lists are pinned; pull z and a onto
    # w's old color, then recolor w, v, u in this order
    if cw not in lists[a["z"]] or cw not in lists[a["a"]]:
        raise ExtensionFailure("configuration 11 recoloring premises do not hold")
    colors[a["z"]] = cw
    colors[a["a"]] = cw
    colors[a["w"]] = _pick(lists, a["w"], {cx, cw, cy, cy1})
    colors[a["v"]] = _pick(lists, a["v"], {cx, cw, cy, colors[a["w"]], cx1})
    colors[a["u"]] = _pick(lists, a["u"], {cx, cw, cy, colors[a["v"]], colors[a["w"]]})


def _repair(
    d: Drawing, step: ReductionStep, partial: Coloring, lists: ListAssignment
) -> Coloring | None:
    """Bounded exhaustive recoloring, escalating through small vertex pools.

    Pools grow from the deleted vertices through the anchors z, v, w, a, so
    repairs stay inside the locality envelope the recoloring branch of the
    11th configuration already uses.  Properness is pruned during the
    search and every leaf is fully verified.
    """
    deleted = set(step.deleted)
    pools = [sorted(deleted)]
    grow = set(deleted)
    for label in ("z", "v", "w", "a"):
        if label in step.anchors and step.anchors[label] not in grow:
            grow.add(step.anchors[label])
            pools.append(sorted(grow))
    for pool in pools:
        result = _search(d, pool, partial, lists)
        if result is not None:
            return result
    return None


def _search(
    d: Drawing, pool: list[int], partial: Coloring, lists: ListAssignment
) -> Coloring | None:
    work = {v: c for v, c in partial.items() if v not in pool}
    adj = d.adjacency

    def rec(i: int) -> Coloring | None:
        if i == len(pool):
            candidate = dict(work)
            if verify_dynamic(d, candidate, 3).valid:
                return candidate
            return None
        v = pool[i]
        for c in sorted(lists[v]):
            if any(work.get(w) == c for w in adj[v]):
                continue
            work[v] = c
            result = rec(i + 1)
            if result is not None:
                return result
            del work[v]
        return None

    return rec(0)
