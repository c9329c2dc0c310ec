"""Command-line front end for reproducible verification runs.

Exit codes: 0 success/completed, 1 verification failure, 2 usage or
precondition error, 3 search budget exhausted.  Identical invocations
write byte-identical files (reports carry no timestamps and all orderings
are canonical).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import voltage
from .graphs import make_family, to_dot, to_json
from .report import STATUS_BUDGET_EXHAUSTED
from .symmetry import zz_check
from .tokens import inclusion_bigraph, johnson, line_graph, subdivision, token_graph

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CONFIG_KEYS = ("out_dir", "max_vertices", "group_cap", "budget")


def parse_family(text: str):
    """'complete:6' -> ('complete', (6,)); bipartite takes two sizes."""
    parts = text.split(":")
    name = parts[0]
    try:
        params = tuple(int(p) for p in parts[1:])
    except ValueError:
        raise ValueError(f"bad family parameters in {text!r}") from None
    if not params:
        raise ValueError(f"family {text!r} is missing its size, e.g. 'complete:6'")
    return name, params


def parse_range(text: str):
    """'4' -> [4]; '4..10' -> [4..10] inclusive."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def read_config(path):
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        key, _, val = line.partition("=")
        key = key.strip()
        if key not in CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = val.strip()
    return values


def _pick(flag_value, cfg_value, default):
    if flag_value is not None:
        return flag_value
    if cfg_value is not None:
        return int(cfg_value)
    return default


def resolve_settings(args):
    """Flags win over config file values, which win over defaults."""
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    out_dir = (getattr(args, "out", None)
               or cfg.get("out_dir")
               or os.environ.get("TOKEN_COVER_OUT")
               or "out")
    max_vertices = _pick(getattr(args, "max_vertices", None), cfg.get("max_vertices"), 200)
    group_cap = _pick(getattr(args, "group_cap", None), cfg.get("group_cap"), 10**6)
    budget = _pick(getattr(args, "budget", None), cfg.get("budget"), 10**6)
    if min(max_vertices, group_cap, budget) < 1:
        raise ValueError("caps must be positive")
    return Path(out_dir), max_vertices, group_cap, budget


def write_file(directory: Path, name: str, content: str) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / name
    target.write_text(content)
    return target


def write_graph(directory, stem, graph, formats):
    written = []
    if formats in ("dot", "both"):
        written.append(write_file(directory, f"{stem}.dot", to_dot(graph)))
    if formats in ("json", "both"):
        written.append(write_file(directory, f"{stem}.json", to_json(graph)))
    return written


def cmd_build(args) -> int:
    out_dir, max_vertices, _, _ = resolve_settings(args)
    jobs = []
    if args.token:
        name, params = parse_family(args.token)
        if args.k is None:
            raise ValueError("--token requires --k")
        graph = token_graph(make_family(name, *params), args.k)
        jobs.append((f"token_{name}{'_'.join(map(str, params))}_k{args.k}", graph))
    if args.johnson:
        n, k = args.johnson
        jobs.append((f"johnson_{n}_{k}", johnson(n, k)))
    if args.line:
        name, params = parse_family(args.line)
        jobs.append((f"line_{name}{'_'.join(map(str, params))}",
                     line_graph(make_family(name, *params))))
    if args.subdivision:
        name, params = parse_family(args.subdivision)
        jobs.append((f"subdivision_{name}{'_'.join(map(str, params))}",
                     subdivision(make_family(name, *params))))
    if args.inclusion:
        n, a, b = args.inclusion
        jobs.append((f"inclusion_{n}_{a}_{b}", inclusion_bigraph(n, a, b)))
    if args.family:
        name, params = parse_family(args.family)
        jobs.append((f"{name}{'_'.join(map(str, params))}", make_family(name, *params)))
    if args.theorem1_base is not None:
        cvg = voltage.theorem1_base(args.theorem1_base)
        stem = f"theorem1_base_{args.theorem1_base}"
        if args.format in ("dot", "both"):
            write_file(out_dir, f"{stem}.dot", cvg.to_dot())
        if args.format in ("json", "both"):
            write_file(out_dir, f"{stem}.json", cvg.to_json())
        print(f"{stem}: {cvg.base.vertex_count} vertices, {cvg.base.edge_count} edges")
    if args.theorem1_cover is not None:
        cover = voltage.lift(voltage.theorem1_base(args.theorem1_cover))
        jobs.append((f"theorem1_cover_{args.theorem1_cover}", cover.graph))
    if not jobs and args.theorem1_base is None:
        raise ValueError("nothing to build; pass --token/--johnson/--line/"
                         "--subdivision/--inclusion/--family/--theorem1-base/--theorem1-cover")
    for stem, graph in jobs:
        if graph.vertex_count > max_vertices:
            raise ValueError(f"{stem}: {graph.vertex_count} vertices exceed the cap {max_vertices}")
        write_graph(out_dir, stem, graph, args.format)
        print(f"{stem}: {graph.vertex_count} vertices, {graph.edge_count} edges")
    return EXIT_OK


def cmd_verify_theorem1(args) -> int:
    out_dir, max_vertices, _, _ = resolve_settings(args)
    values = parse_range(args.n)
    if len(values) == 1 and values[0] % 2 != 0:
        raise ValueError(f"n must be even, got {values[0]}")
    evens = [n for n in values if n % 2 == 0 and n >= 4]
    if not evens:
        raise ValueError(f"no even n >= 4 in {args.n!r}")
    all_passed = True
    for n in evens:
        report = voltage.verify_theorem1(n, max_vertices=max_vertices)
        write_file(out_dir, f"theorem1_n{n}.json", report.to_json())
        print(f"n={n}: {report.status.upper()} "
              f"({report.find('cover_vertices')} vertices, "
              f"{report.find('cover_simple_edges')} simple edges)")
        all_passed &= report.passed
    return EXIT_OK if all_passed else EXIT_VERIFICATION_FAILED


def cmd_zz(args) -> int:
    out_dir, max_vertices, _, _ = resolve_settings(args)
    name, params = parse_family(args.family)
    stem_family = f"{name}{'_'.join(map(str, params))}"
    all_passed = True
    for k in parse_range(args.k):
        report = zz_check(name, params, k, max_vertices=max_vertices)
        write_file(out_dir, f"zz_{stem_family}_k{k}.json", report.to_json())
        print(f"{stem_family} k={k}: {report.status.upper()} "
              f"(predicted={report.find('predicted_edge_transitive')}, "
              f"computed={report.find('computed_edge_transitive')})")
        all_passed &= report.passed
    return EXIT_OK if all_passed else EXIT_VERIFICATION_FAILED


def cmd_conjecture(args) -> int:
    out_dir, max_vertices, _, budget = resolve_settings(args)
    family = {1: "star_half", 2: "star_two"}[args.which]
    report = voltage.conjecture_search(family, args.n, budget=budget,
                                       max_vertices=max_vertices)
    write_file(out_dir, f"conjecture{args.which}_n{args.n}.json", report.to_json())
    found = report.find("verified_candidates")
    print(f"conjecture {args.which} n={args.n}: {report.status.upper()}, "
          f"{len(found)} verified candidate(s)")
    for cand in found:
        print(f"  base {cand['base_vertices']} vertices "
              f"(free={cand['free']}, stabilizers={cand['stabilizer_sizes']})")
    return EXIT_BUDGET if report.status == STATUS_BUDGET_EXHAUSTED else EXIT_OK


def add_common(parser):
    parser.add_argument("--out", help="output directory (default $TOKEN_COVER_OUT or ./out)")
    parser.add_argument("--config", help="key=value config file; flags win")
    parser.add_argument("--max-vertices", type=int, dest="max_vertices")
    parser.add_argument("--group-cap", type=int, dest="group_cap")
    parser.add_argument("--budget", type=int)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="token-covers",
        description="Token graphs, covering lifts, and verification runs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write graphs as DOT/JSON files")
    p.add_argument("--token", metavar="FAMILY", help="token graph of a family, e.g. star:5")
    p.add_argument("--k", type=int, help="token count for --token")
    p.add_argument("--johnson", nargs=2, type=int, metavar=("N", "K"))
    p.add_argument("--line", metavar="FAMILY")
    p.add_argument("--subdivision", metavar="FAMILY")
    p.add_argument("--inclusion", nargs=3, type=int, metavar=("N", "A", "B"))
    p.add_argument("--family", metavar="FAMILY", help="the family graph itself")
    p.add_argument("--theorem1-base", type=int, metavar="N", dest="theorem1_base")
    p.add_argument("--theorem1-cover", type=int, metavar="N", dest="theorem1_cover")
    p.add_argument("--format", choices=("dot", "json", "both"), default="both")
    add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify-theorem1", help="verify the even-n cover construction")
    p.add_argument("--n", required=True, help="even n or range a..b (odd values in a range are skipped)")
    add_common(p)
    p.set_defaults(func=cmd_verify_theorem1)

    p = sub.add_parser("zz", help="edge-transitivity classification instances")
    p.add_argument("--family", required=True, help="e.g. complete:5, star:4, path:4")
    p.add_argument("--k", required=True, help="k or range a..b")
    add_common(p)
    p.set_defaults(func=cmd_zz)

    p = sub.add_parser("conjecture", help="search for cyclic quotient bases")
    p.add_argument("which", type=int, choices=(1, 2))
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_conjecture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
