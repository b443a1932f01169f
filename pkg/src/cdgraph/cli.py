"""Command-line front end.

Exit status: 0 when every check passes or is skipped, 1 on a failed check
or a conjecture finding, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .classgraph import common_divisor_graph, prime_graph, to_dot
from .constructors import SpecError, build
from .corpus import CorpusError, default_corpus, parse_corpus
from .harness import FAIL, AnalysisError, ScanResult, analyze, check_conjecture, default_primes, scan_corpus
from .numeric import is_prime
from .perm import DEFAULT_CAP, CycleParseError, GroupTooLarge, p_regular_class_size_set


class UsageError(Exception):
    pass


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _slug(label: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in label).strip("_")


def _build(args) -> object:
    try:
        return build(args.group, cap=args.cap)
    except (SpecError, CycleParseError, GroupTooLarge) as e:
        raise UsageError(str(e)) from e


def _write_dots(group, p: int, directory: str) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    sizes = p_regular_class_size_set(group, p)
    written = []
    for graph, tag in ((common_divisor_graph(sizes), "gamma"), (prime_graph(sizes), "delta")):
        path = out / f"{_slug(group.label)}_p{p}_{tag}.dot"
        path.write_text(to_dot(graph, f"{tag}_{p}({group.label})"), encoding="utf-8")
        written.append(path)
    return written


def _print_report(rep) -> None:
    g = rep.gamma_p
    print(f"{rep.label}  |G|={rep.order}  p={rep.p}  p-separable={rep.p_separable}")
    print(f"  cs   = {list(rep.cs)}")
    print(f"  cs_p = {list(rep.cs_p)}")
    shape = "complete" if g.complete else "not complete"
    reg = "irregular" if g.regularity is None else f"{g.regularity}-regular"
    print(f"  Gamma_p: {g.vertex_count} vertices, {g.edge_count} edges, {reg}, {shape}")
    t = rep.theorem
    if t.applicable:
        print(f"  theorem: applicable (k={t.k}), {'holds' if t.holds else 'VIOLATED'}")
    else:
        print("  theorem: not applicable")
    for r in rep.property_results:
        print(f"  [{r.status:7}] {r.name}")


def cmd_analyze(args) -> int:
    group = _build(args)
    primes = [args.prime] if args.prime else default_primes(group.order)
    reports = [analyze(group, p) for p in primes]
    for rep in reports:
        _print_report(rep)
        if args.dot:
            _write_dots(group, rep.p, args.dot)
    if args.json:
        scan = ScanResult([r.to_dict() for r in reports], [])
        Path(args.json).write_text(scan.to_json(), encoding="utf-8")
    failed = any(r.status == FAIL for rep in reports for r in rep.property_results)
    return 1 if failed else 0


def cmd_scan(args) -> int:
    try:
        entries = parse_corpus(args.corpus) if args.corpus else default_corpus()
    except (OSError, CorpusError) as e:
        raise UsageError(str(e)) from e
    scan = scan_corpus(entries, jobs=args.jobs, cap=args.cap)
    for e in scan.entries:
        if "error" in e:
            print(f"ERROR {e['group']} (line {e['line']}): {e['error']}")
            continue
        bad = [r["name"] for r in e["property_results"] if r["status"] == FAIL]
        status = "FAIL " + ",".join(bad) if bad else "ok"
        print(f"{e['group']:<24} p={e['prime']:<3} {status}")
    s = scan.summary
    print(
        f"{len(entries)} groups, {s['checks_run']} checks: {s['passed']} passed, "
        f"{s['failed']} failed, {s['skipped']} skipped; {s['findings']} findings; "
        f"{s['errors']} errors; {sum(scan.timings):.2f}s"
    )
    if args.json:
        Path(args.json).write_text(scan.to_json(), encoding="utf-8")
    return scan.exit_status


def cmd_conjecture(args) -> int:
    group = _build(args)
    search = check_conjecture(group, args.prime)
    print(
        f"{len(search.findings)} findings ({search.class_pairs} class pairs, "
        f"coprime: {search.coprime_pairs}, products tested: {search.products_tested})"
    )
    for f in search.findings:
        print("  " + json.dumps(f.to_dict()))
    return 1 if search.findings else 0


def cmd_graph(args) -> int:
    group = _build(args)
    for path in _write_dots(group, args.prime, args.dot):
        print(path)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, prime_required):
        p.add_argument("--group", required=True, help='group spec, e.g. "AGammaL(1,8)"')
        p.add_argument("--prime", type=_prime, required=prime_required)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element enumeration cap")

    p = sub.add_parser("analyze", help="full analysis of one group")
    common(p, False)
    p.add_argument("--json", help="write the JSON report here")
    p.add_argument("--dot", help="write Gamma_p/Delta_p DOT files into this directory")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scan", help="analyze every group of a corpus file")
    p.add_argument("--corpus", help="corpus file (default: $CDGRAPH_CORPUS or the shipped corpus)")
    p.add_argument("--json", help="write the JSON report here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("conjecture", help="search one group for coprime-product counterexamples")
    common(p, True)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("graph", help="write Gamma_p and Delta_p as DOT files")
    common(p, True)
    p.add_argument("--dot", required=True)
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, AnalysisError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
