"""Command-line surface.

Subcommands:

* ``analyze FILE``     report Booleanization/DeMorganization and flags
* ``verify FILE``      analyze plus the full invariant suite
* ``corpus``           sweep generated topologies, emitting JSON-lines reports
* ``export-dot FILE``  Hasse diagram of the frame or of its sublocale lattice

Exit codes: 0 success, 1 input error, 2 mathematical-integrity failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .cache import ResultCache
from .dot import export_frame_dot, export_sublocales_dot
from .errors import FinframeError, IntegrityError, OracleFailure, TooLarge
from .report import analyze_frame, error_report, report_failures
from .spec_io import build_from_spec, default_name, parse_frame_spec, serialize_frame_spec
from .sublocales import DEFAULT_ENUM_CAP
from .builders import enumerate_topologies, random_topology, TopologySpec
from .spec_io import FrameSpec

__all__ = ["main"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTEGRITY = 2


def _dump(report: dict) -> str:
    return json.dumps(report, ensure_ascii=False, indent=2)


def _dump_line(report: dict) -> str:
    return json.dumps(report, ensure_ascii=False, separators=(",", ":"))


def _make_cache(args) -> ResultCache:
    return ResultCache(root=args.cache_dir, enabled=not args.no_cache)


def _read_spec(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FinframeError(f"cannot read {path}: {exc}") from None
    return text, parse_frame_spec(text)


def _cmd_analyze(args, extended: bool) -> int:
    text, spec = _read_spec(args.file)
    cache = _make_cache(args)
    mode = "verify" if extended else "analyze"
    key = cache.key("\n".join((serialize_frame_spec(spec), mode,
                               json.dumps({"oracle": args.oracle}, sort_keys=True))))
    cached = cache.get(key)
    if cached is not None:
        report = json.loads(cached)
    else:
        frame = build_from_spec(spec)
        if args.oracle and frame.size > DEFAULT_ENUM_CAP:
            raise TooLarge(
                f"oracle mode needs at most {DEFAULT_ENUM_CAP} elements, frame has {frame.size}")
        report = analyze_frame(frame, default_name(spec, frame),
                               oracle=args.oracle, extended=extended)
        cache.put(key, _dump_line(report))
    print(_dump(report))
    return EXIT_INTEGRITY if report_failures(report) else EXIT_OK


def _topology_spec_to_frame_spec(t: TopologySpec) -> FrameSpec:
    return FrameSpec("topology",
                     {"points": list(t.points), "opens": [list(o) for o in t.opens]},
                     t.name)


def _corpus_specs(args):
    if args.all:
        for t in enumerate_topologies(args.points):
            yield _topology_spec_to_frame_spec(t)
    else:
        for i in range(args.random):
            yield _topology_spec_to_frame_spec(random_topology(args.points, args.seed + i))


def _corpus_line(task) -> tuple:
    idx, spec_text, oracle = task
    spec = parse_frame_spec(spec_text)
    try:
        frame = build_from_spec(spec)
        report = analyze_frame(frame, default_name(spec, frame),
                               oracle=oracle, runtime_fixed=0)
    except FinframeError as exc:
        report = error_report(spec.name or "unnamed", str(exc))
    return idx, _dump_line(report)


def _cmd_corpus(args) -> int:
    if args.all and args.points > 4:
        raise TooLarge("--all supports at most 4 points")
    if not args.all and args.points > 6:
        raise TooLarge("--random supports at most 6 points")
    cache = _make_cache(args)
    flag_blob = json.dumps({"oracle": args.oracle}, sort_keys=True)

    pending = []   # (idx, spec_text, cache_key)
    lines: dict[int, str] = {}
    keys: dict[int, str] = {}
    for idx, spec in enumerate(_corpus_specs(args)):
        spec_text = serialize_frame_spec(spec)
        key = cache.key("\n".join((spec_text, "corpus", flag_blob)))
        keys[idx] = key
        cached = cache.get(key)
        if cached is not None:
            lines[idx] = cached
        else:
            pending.append((idx, spec_text, args.oracle))

    if pending:
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                for idx, line in pool.map(_corpus_line, pending, chunksize=8):
                    lines[idx] = line
                    cache.put(keys[idx], line)
        else:
            for task in pending:
                idx, line = _corpus_line(task)
                lines[idx] = line
                cache.put(keys[idx], line)

    out = sys.stdout
    close = False
    if args.out is not None:
        out = open(args.out, "w", encoding="utf-8")
        close = True
    try:
        counts = {"frames": 0, "ed_count": 0, "boolean_count": 0,
                  "B_equals_M_count": 0, "failures": 0}
        for idx in sorted(lines):
            line = lines[idx]
            out.write(line + "\n")
            report = json.loads(line)
            counts["frames"] += 1
            flags = report["flags"]
            counts["ed_count"] += bool(flags["ed"])
            counts["boolean_count"] += bool(flags["boolean"])
            counts["B_equals_M_count"] += bool(flags["B_equals_M"])
            counts["failures"] += report_failures(report)
    finally:
        if close:
            out.close()
    summary = json.dumps(counts, ensure_ascii=False, separators=(",", ":"))
    if close:
        print(summary)
    else:
        print(summary, file=sys.stderr)
    return EXIT_INTEGRITY if counts["failures"] else EXIT_OK


def _cmd_export_dot(args) -> int:
    _, spec = _read_spec(args.file)
    frame = build_from_spec(spec)
    if args.what == "frame":
        sys.stdout.write(export_frame_dot(frame))
    else:
        sys.stdout.write(export_sublocales_dot(frame))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finframe",
        description="Finite-frame analysis: Booleanization, DeMorganization, oracles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cache_flags(p):
        p.add_argument("--cache-dir", default=None, help="result cache directory")
        p.add_argument("--no-cache", action="store_true", help="disable the result cache")

    p = sub.add_parser("analyze", help="report constructions and flags for one frame")
    p.add_argument("file", help="FrameSpec JSON file")
    p.add_argument("--oracle", action="store_true", help="also run the enumeration oracles")
    add_cache_flags(p)

    p = sub.add_parser("verify", help="analyze plus the full invariant suite")
    p.add_argument("file", help="FrameSpec JSON file")
    p.add_argument("--oracle", action="store_true", help="also run the enumeration oracles")
    add_cache_flags(p)

    p = sub.add_parser("corpus", help="sweep generated topologies, emitting JSON-lines")
    p.add_argument("--points", type=int, required=True, help="number of space points")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="every topology (points <= 4)")
    group.add_argument("--random", type=int, metavar="K", default=0,
                       help="K seeded random topologies (points <= 6)")
    p.add_argument("--seed", type=int, default=0, help="base seed for --random")
    p.add_argument("--oracle", action="store_true",
                   help="run enumeration oracles on frames within the cap")
    p.add_argument("--out", default=None, help="write JSON-lines here instead of stdout")
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    add_cache_flags(p)

    p = sub.add_parser("export-dot", help="Hasse diagram in DOT format")
    p.add_argument("file", help="FrameSpec JSON file")
    p.add_argument("--what", choices=("frame", "sublocales"), default="frame")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # usage problems are input errors under the exit-code contract
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        if args.command == "analyze":
            return _cmd_analyze(args, extended=False)
        if args.command == "verify":
            return _cmd_analyze(args, extended=True)
        if args.command == "corpus":
            return _cmd_corpus(args)
        if args.command == "export-dot":
            return _cmd_export_dot(args)
        parser.error(f"unknown command {args.command!r}")
    except (IntegrityError, OracleFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except FinframeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
