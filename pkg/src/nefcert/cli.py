"""Command-line surface.

Exit codes: 0 success or CONFIRMED, 2 HYPOTHESIS_NOT_MET, 3 DISCREPANCY,
1 usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import corpus
from .certify import (
    CertificateReport,
    certify_corollary,
    certify_edge,
    certify_main1,
    certify_main2,
)
from .configurations import as_configuration
from .exceptions import HypothesisNotMet, NefcertError, NotUnimodular
from .graphs import (
    edge_polytope_dim,
    is_bipartite,
    is_connected,
    odd_cycles_pairwise_intersect,
    parse_family_spec,
    parse_graph,
    render_graph,
)
from .linalg import (
    is_unimodular,
    maximal_minor_profile,
    parse_matrix,
    rank,
    render_matrix,
)
from .polytopes import parse_polytope
from .toric import (
    conform_azeroGB,
    conform_cayleyGB,
    conform_pmGB,
    render_basis,
)

VERDICT_CODES = {"CONFIRMED": 0, "HYPOTHESIS_NOT_MET": 2, "DISCREPANCY": 3}


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_graph(spec: str):
    if os.path.exists(spec):
        return parse_graph(_read(spec)), Path(spec).stem
    return parse_family_spec(spec), spec


def _emit_report(report: CertificateReport, fmt: str, timings: bool) -> int:
    if fmt == "json":
        print(report.to_json(include_timings=timings))
    else:
        print(f"verdict: {report.verdict}")
        for h in report.hypotheses:
            mark = "ok" if h.passed else "FAILED"
            extra = f"  {h.details}" if h.details and not h.passed else ""
            print(f"  hypothesis {h.name}: {mark}{extra}")
        for c in report.clauses:
            print(f"  clause {c.name}: {c.status}")
            for key, val in c.data.items():
                if key == "report":
                    continue
                print(f"    {key}: {val}")
    return VERDICT_CODES[report.verdict]


def _cmd_analyze(args) -> int:
    M = parse_matrix(_read(args.path))
    profile = maximal_minor_profile(M)
    uni = is_unimodular(M)
    try:
        conf = as_configuration(M)
        witness = [str(x) for x in conf.witness]
        is_conf = True
    except NefcertError:
        witness = None
        is_conf = False
    payload = {
        "rows": M.rows,
        "cols": M.cols,
        "rank": rank(M),
        "configuration": is_conf,
        "witness": witness,
        "unimodular": uni,
        "minor_profile_distinct": sorted(set(profile)),
        "minor_profile_size": len(profile),
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, val in payload.items():
            print(f"{key}: {val}")
    return 0


def _cmd_polytope(args) -> int:
    P = parse_polytope(_read(args.path))
    wanted = []
    if args.hstar:
        wanted.append(("hstar", lambda: " ".join(str(c) for c in P.h_star().coefficients)))
    if args.reflexive:
        wanted.append(("reflexive", lambda: str(P.is_reflexive()).lower()))
    if args.gorenstein:
        wanted.append(("gorenstein",
                       lambda: str(P.gorenstein_index()) if P.gorenstein_index() else "none"))
    if args.spanning:
        wanted.append(("spanning", lambda: str(P.is_spanning()).lower()))
    if args.idp is not None:
        wanted.append(("idp", lambda: str(P.idp_check(args.idp)).lower()))
    if args.format == "json":
        payload = {"ambient_dim": P.ambient_dim, "dim": P.dim,
                   "vertices": [list(v) for v in P.vertices]}
        payload.update({name: fn() for name, fn in wanted})
        if not wanted:
            payload.update({
                "lattice_point_count": len(P.lattice_points()),
                "hstar": " ".join(str(c) for c in P.h_star().coefficients),
                "reflexive": str(P.is_reflexive()).lower(),
                "gorenstein": str(P.gorenstein_index() or "none"),
                "spanning": str(P.is_spanning()).lower(),
            })
        print(json.dumps(payload, indent=2))
        return 0
    if not wanted:
        print(f"ambient dim: {P.ambient_dim}")
        print(f"dim: {P.dim}")
        print(f"vertices: {len(P.vertices)}")
        print(f"lattice points: {len(P.lattice_points())}")
        print(f"h*: {' '.join(str(c) for c in P.h_star().coefficients)}")
        print(f"reflexive: {str(P.is_reflexive()).lower()}")
        print(f"gorenstein index: {P.gorenstein_index() or 'none'}")
        print(f"spanning: {str(P.is_spanning()).lower()}")
        return 0
    if len(wanted) == 1:
        print(wanted[0][1]())
    else:
        for name, fn in wanted:
            print(f"{name}: {fn()}")
    return 0


def _cmd_gb(args) -> int:
    M = parse_matrix(_read(args.path))
    A = as_configuration(M)
    runner = {"pm": conform_pmGB, "cayley": conform_cayleyGB, "azero": conform_azeroGB}[args.mode]
    try:
        gb, report = runner(A)
    except (NotUnimodular, HypothesisNotMet) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    lines = render_basis(gb, report.variable_names)
    if args.format == "json":
        payload = {
            "mode": args.mode,
            "n": report.n,
            "s": report.s,
            "conforms": report.conforms,
            "failures": list(report.failures),
            "basis": lines,
        }
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)
        print(f"n = {report.n}, s = {report.s}, conforms: {report.conforms}")
        for f in report.failures:
            print(f"  violation: {f}")
    return 0 if report.conforms else 3


def _cmd_certify(args) -> int:
    timings = not args.no_timings
    if args.statement == "edge":
        if args.all_corpus:
            worst = 0
            for name, G in corpus.corpus_graphs():
                report = certify_edge(G, args.check_all_translates, args.cycle_cap,
                                      name=name)
                print(f"{name}: {report.verdict}")
                if report.verdict == "DISCREPANCY":
                    worst = 3
            return worst
        G, name = _load_graph(args.input)
        report = certify_edge(G, args.check_all_translates, args.cycle_cap, name=name)
        return _emit_report(report, args.format, timings)
    A = as_configuration(parse_matrix(_read(args.input)))
    if args.statement == "main1":
        report = certify_main1(A, args.check_all_translates)
    elif args.statement == "main2":
        report = certify_main2(A, args.check_all_translates)
    else:
        report = certify_corollary(A)
    return _emit_report(report, args.format, timings)


def _cmd_graph(args) -> int:
    G, name = _load_graph(args.spec)
    payload = {
        "name": name,
        "vertices": G.vertex_count,
        "edges": len(G.edges),
        "connected": is_connected(G),
        "bipartite": is_bipartite(G),
        "odd_cycle_pairs_intersect": odd_cycles_pairwise_intersect(G, args.cycle_cap),
    }
    if payload["connected"]:
        payload["edge_polytope_dim"] = edge_polytope_dim(G)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, val in payload.items():
            print(f"{key}: {val}")
    return 0


def _cmd_seed_corpus(args) -> int:
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, A in corpus.identity_configurations():
        (out / f"{name}.mat").write_text(render_matrix(A.matrix))
    for name, G in corpus.corpus_graphs():
        (out / f"{name}.graph").write_text(render_graph(G))
    print(f"wrote corpus to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nefcert",
        description="Exact certification of Groebner-basis structure and "
                    "reflexivity/Gorenstein facts for centrally symmetric "
                    "and Cayley constructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a matrix file")
    p.add_argument("what", choices=["matrix"])
    p.add_argument("path")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("polytope", help="polytope predicates from a vertex file")
    p.add_argument("path")
    p.add_argument("--hstar", action="store_true")
    p.add_argument("--reflexive", action="store_true")
    p.add_argument("--gorenstein", action="store_true")
    p.add_argument("--spanning", action="store_true")
    p.add_argument("--idp", type=int, default=None, metavar="K_MAX")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("gb", help="reduced basis and structure check")
    p.add_argument("path")
    p.add_argument("--mode", choices=["pm", "cayley", "azero"], required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("certify", help="run a certification pipeline")
    p.add_argument("statement", choices=["main1", "main2", "corollary", "edge"])
    p.add_argument("input", nargs="?")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--check-all-translates", action="store_true")
    p.add_argument("--cycle-cap", type=int, default=None)
    p.add_argument("--no-timings", action="store_true")
    p.add_argument("--all-corpus", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("graph", help="graph facts from a family spec or file")
    p.add_argument("spec")
    p.add_argument("--cycle-cap", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("seed-corpus", help="dump the built-in instance corpus")
    p.add_argument("dir")
    p.set_defaults(func=_cmd_seed_corpus)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    if getattr(args, "command", None) == "certify" and args.statement != "edge":
        if args.input is None:
            print("certify: an input file is required", file=sys.stderr)
            return 1
    if getattr(args, "command", None) == "certify" and args.statement == "edge":
        if args.input is None and not args.all_corpus:
            print("certify edge: a graph spec or --all-corpus is required", file=sys.stderr)
            return 1
    try:
        return args.func(args)
    except (NefcertError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
