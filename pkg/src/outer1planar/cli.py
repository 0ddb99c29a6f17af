"""Command-line front door.

Machine-readable JSON goes to stdout, human notes to stderr.  Commands take
a drawing file path or "-" for stdin, so generators pipe into analyzers.
Exit codes: 0 success/valid verdict, 1 false verdict, 2 input error,
3 internal guarantee violation (not found where a theorem promises one).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass

from . import catalog, coloring, generators, oracle, structure
from .drawing import Drawing, DrawingError, emit_dot, emit_drawing, parse_drawing

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_GUARANTEE = 3


@dataclass(frozen=True)
class RunReport:
    command: str
    input_digest: str
    result: dict
    elapsed_ms: float


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _note(message: str) -> None:
    sys.stderr.write(message + "\n")


def _drawing_from(path: str) -> tuple[Drawing, str]:
    text = _read_input(path)
    return parse_drawing(text), text


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("O1P_WORKERS", "1")))
    except ValueError:
        return 1


def _cmd_validate(args) -> tuple[int, dict]:
    d, _ = _drawing_from(args.file)
    if args.emit == "dot":
        sys.stdout.write(emit_dot(d))
        return EXIT_OK, {}
    return EXIT_OK, {
        "valid": True,
        "n": d.n,
        "edges": sorted(list(e) for e in d.edges),
        "crossings": sorted([list(e), list(f)] for e, f in d.crossing_pairs),
    }


def _cmd_find_config(args) -> tuple[int, dict]:
    d, _ = _drawing_from(args.file)
    if args.check_d2:
        for pid in range(1, 18):
            matches = catalog.find_matches(d, catalog.get_pattern(pid), check_d2=True)
            if matches:
                m = matches[0]
                return EXIT_OK, {
                    "config": m.pattern_id,
                    "assignment": {l: v for l, v in sorted(m.assignment.items())},
                    "d2_checked": True,
                }
        raise structure.StructureNotFound("no configuration with drawing correspondence")
    m = structure.find_structure(d)
    return EXIT_OK, {
        "config": m.pattern_id,
        "assignment": {l: v for l, v in sorted(m.assignment.items())},
        "d2_checked": False,
    }


def _cmd_light_edge(args) -> tuple[int, dict]:
    d, _ = _drawing_from(args.file)
    e = structure.find_light_edge(d, maximal_mode=args.maximal)
    return EXIT_OK, {
        "edge": list(e.endpoints),
        "degree_sum": e.degree_sum,
        "maximal_mode": args.maximal,
    }


def _cmd_reduce(args) -> tuple[int, dict]:
    d, _ = _drawing_from(args.file)
    s = structure.find_reduction(d)
    return EXIT_OK, {
        "kind": s.kind,
        "deleted": sorted(s.deleted),
        "anchors": {k: v for k, v in sorted(s.anchors.items())},
    }


def _cmd_color(args) -> tuple[int, dict]:
    d, _ = _drawing_from(args.file)
    if args.lists:
        lists = coloring.parse_lists(_read_input(args.lists))
    else:
        lists = coloring.uniform_lists(d, args.palette)
    colors = coloring.color_list_3_dynamic(d, lists)
    verdict = coloring.verify_dynamic(d, colors, 3)
    return EXIT_OK, {
        "colors": {str(v): colors[v] for v in sorted(colors)},
        "valid": verdict.valid,
        "r": 3,
    }


def _cmd_verify(args) -> tuple[int, dict]:
    d, _ = _drawing_from(args.file)
    colors = coloring.parse_coloring_json(_read_input(args.coloring))
    try:
        verdict = coloring.verify_dynamic(d, colors, args.r)
    except KeyError as exc:
        raise DrawingError(f"coloring does not cover vertex {exc}") from exc
    payload: dict = {"valid": verdict.valid, "r": args.r}
    if not verdict.valid:
        first = verdict.violations[0]
        payload["violation"] = {
            "kind": first.kind,
            "vertex": first.vertex,
            "edge": list(first.edge) if first.edge else None,
            "detail": first.detail,
        }
        return EXIT_FALSE, payload
    return EXIT_OK, payload


def _cmd_oracle_chi(args) -> tuple[int, dict]:
    d, _ = _drawing_from(args.file)
    chi = oracle.chromatic_r_dynamic(oracle.underlying(d), args.r, args.k_max)
    if chi is None:
        return EXIT_FALSE, {"chi": None, "k_max": args.k_max, "r": args.r}
    return EXIT_OK, {"chi": chi, "r": args.r}


def _cmd_oracle_recognize(args) -> tuple[int, dict]:
    d, _ = _drawing_from(args.file)
    verdict = oracle.is_outer_1_planar(oracle.underlying(d))
    return (EXIT_OK if verdict else EXIT_FALSE), {"outer_1_planar": verdict}


def _cmd_oracle_maximal(args) -> tuple[int, dict]:
    d, _ = _drawing_from(args.file)
    verdict = oracle.is_maximal(d)
    return (EXIT_OK if verdict else EXIT_FALSE), {"maximal": verdict}


def _check_structure(d: Drawing) -> bool:
    if not d.is_connected() or d.min_degree < 2:
        return True
    try:
        structure.find_structure(d)
        return True
    except structure.StructureNotFound:
        return False


def _check_light(d: Drawing) -> bool:
    if not d.is_connected() or d.min_degree < 2:
        return True
    try:
        return structure.find_light_edge(d).degree_sum <= 9
    except structure.StructureNotFound:
        return False


def _check_reduce(d: Drawing) -> bool:
    try:
        structure.find_reduction(d)
        return True
    except structure.StructureNotFound:
        return False


def _check_chi(d: Drawing) -> bool:
    if not d.is_connected():
        return True
    return oracle.has_r_dynamic_k_coloring(oracle.underlying(d), 3, 6)


_CHECKS = {
    "structure": _check_structure,
    "light": _check_light,
    "reduce": _check_reduce,
    "chi": _check_chi,
}


def _cmd_enumerate(args) -> tuple[int, dict]:
    total = 0
    classes = 0
    failures = 0
    check = _CHECKS.get(args.check) if args.check else None
    seen: set[tuple] = set()
    reps: list[Drawing] = []
    for d in oracle.enumerate_drawings(args.n, args.filter):
        total += 1
        key = oracle.canonical_key(d)
        if key in seen:
            continue
        seen.add(key)
        classes += 1
        if check is not None:
            reps.append(d)
    if check is not None:
        workers = _workers()
        if workers > 1:
            import multiprocessing

            with multiprocessing.Pool(workers) as pool:
                verdicts = pool.map(check, reps)
            failures = sum(1 for ok in verdicts if not ok)
        else:
            failures = sum(1 for d in reps if not check(d))
    payload = {
        "n": args.n,
        "filter": args.filter,
        "count": total,
        "classes": classes,
    }
    if check is not None:
        payload["check"] = args.check
        payload["failures"] = failures
        if failures:
            return EXIT_GUARANTEE, payload
    return EXIT_OK, payload


def _cmd_generate(args) -> tuple[int, dict]:
    what = args.what
    if what == "cycle":
        if args.arg is None:
            raise DrawingError("generate cycle needs a vertex count")
        d = generators.cycle(int(args.arg))
    elif what == "sharp":
        d = generators.sharp_example()
    elif what.startswith("h"):
        d = generators.h_family(int(what[1:]))
    elif what == "random":
        d = generators.random_outer_1_planar(args.n, args.density, args.seed)
    else:
        raise DrawingError(f"unknown generator {what!r}")
    sys.stdout.write(emit_dot(d) if args.emit == "dot" else emit_drawing(d))
    return EXIT_OK, {}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="o1p",
        description="Structure and list 3-dynamic coloring of outer-1-plane drawings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a drawing file")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--emit", choices=["dot"], default=None)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("find-config", help="find a contained configuration")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--check-d2", action="store_true")
    p.set_defaults(fn=_cmd_find_config)

    p = sub.add_parser("light-edge", help="find an edge with small degree sum")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--maximal", action="store_true")
    p.set_defaults(fn=_cmd_light_edge)

    p = sub.add_parser("reduce", help="find a reducible configuration")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("color", help="compute a list 3-dynamic coloring")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--lists", default=None, help="list-assignment file")
    p.add_argument("--palette", type=int, default=6, help="uniform palette 1..k")
    p.set_defaults(fn=_cmd_color)

    p = sub.add_parser("verify", help="verify an r-dynamic coloring")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--coloring", required=True, help="coloring JSON file")
    p.add_argument("--r", type=int, default=3)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("chi", help="exact r-dynamic chromatic number")
    q.add_argument("file", nargs="?", default="-")
    q.add_argument("--r", type=int, default=3)
    q.add_argument("--k-max", type=int, default=8)
    q.set_defaults(fn=_cmd_oracle_chi)
    q = osub.add_parser("recognize", help="outer-1-planarity of the underlying graph")
    q.add_argument("file", nargs="?", default="-")
    q.set_defaults(fn=_cmd_oracle_recognize)
    q = osub.add_parser("maximal", help="maximality of a drawing")
    q.add_argument("file", nargs="?", default="-")
    q.set_defaults(fn=_cmd_oracle_maximal)

    p = sub.add_parser("enumerate", help="enumerate drawings, optionally checking claims")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--filter",
        choices=["all", "connected", "connected-min-deg-2"],
        default="all",
    )
    p.add_argument("--check", choices=sorted(_CHECKS), default=None)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("generate", help="emit a generated drawing")
    p.add_argument("what", help="cycle | sharp | h<i> | random")
    p.add_argument("arg", nargs="?", default=None, help="vertex count for cycle")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit", choices=["dot"], default=None)
    p.set_defaults(fn=_cmd_generate)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    start = time.monotonic()
    try:
        code, payload = args.fn(args)
    except (DrawingError, coloring.ListTooSmall, oracle.SizeLimitExceeded, ValueError) as exc:
        _emit({"error": str(exc)})
        _note(f"input error: {exc}")
        return EXIT_INPUT
    except FileNotFoundError as exc:
        _emit({"error": str(exc)})
        _note(f"input error: {exc}")
        return EXIT_INPUT
    except (structure.StructureNotFound, coloring.ExtensionFailure) as exc:
        _emit({"error": str(exc)})
        _note(f"guarantee violation: {exc}")
        return EXIT_GUARANTEE
    if payload:
        _emit(payload)
    if os.environ.get("O1P_REPORT"):
        digest = hashlib.sha256(" ".join(sys.argv).encode()).hexdigest()[:16]
        report = RunReport(
            command=args.command,
            input_digest=digest,
            result=payload,
            elapsed_ms=round((time.monotonic() - start) * 1000, 3),
        )
        _note(json.dumps(report.__dict__, sort_keys=True, default=str))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
