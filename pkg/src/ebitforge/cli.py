"""``ebitforge`` command line.

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .codefile import load_code, save_code
from .graphs import Graph, read_graph, ring_graph, standard_generators
from .induction import enumerate_errors, induce_set, induced_report, parse_vector
from .pauli import render_pauli

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _graph(args) -> Graph:
    if args.graph and args.ring:
        raise UsageError("give either --graph or --ring, not both")
    if args.ring:
        return ring_graph(args.ring)
    if not args.graph:
        raise UsageError("a graph is required (--graph FILE or --ring N)")
    try:
        return read_graph(args.graph)
    except (OSError, ValueError) as exc:
        raise UsageError(f"bad graph file: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_gens(args) -> int:
    g = _graph(args)
    s = standard_generators(g, args.ebits)
    if args.format == "json":
        _emit(json.dumps({"n": s.n, "c": s.c,
                          "generators": [render_pauli(p) for p in s.generators]}, indent=2), args.out)
    else:
        _emit("\n".join(s.table()), args.out)
    return EXIT_OK


def cmd_induce(args) -> int:
    g = _graph(args)
    if args.weight < 1:
        raise UsageError("--weight must be at least 1")
    s = standard_generators(g, args.ebits)
    induced = induce_set(enumerate_errors(g.n, args.weight, args.ebits), s)
    if args.format == "json":
        rows = [{"error": render_pauli(e.origin, signed=False), "induced": str(e)} for e in induced]
        _emit(json.dumps({"count": len(rows), "errors": rows}, indent=2), args.out)
    else:
        _emit(induced_report(induced), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    from .pipeline import search_code

    g = _graph(args)
    if args.weight < 1:
        raise UsageError("--weight must be at least 1")
    subspace = None
    if args.span:
        subspace = []
        for text in args.span:
            bits, n, c = parse_vector(text)
            if (n, c) != (g.n, args.ebits):
                raise UsageError(f"--span vector {text} has the wrong block sizes")
            subspace.append(bits)
    res = search_code(g, args.ebits, args.weight, args.mode, args.target_k, args.budget,
                      subspace, args.threads)
    if res.code is not None and args.out:
        save_code(res.code, args.out)
    if args.format == "json":
        print(json.dumps(res.to_json(), indent=2))
    else:
        k = len(res.clique.clique)
        print(f"diff set: {res.diff_set_size} vectors, {res.degenerate_pairs} degenerate pairs, "
              f"{res.candidates} candidates")
        print(f"clique: K={k} ({res.clique.flag}, {res.clique.nodes} nodes)")
        if res.code is not None:
            print(f"code {res.code.params}")
            for cw, w in zip(res.code.codewords.strings(), res.code.word_ops_encoded):
                print(f"  {cw}  {render_pauli(w, signed=False)}")
            print("  (word operators shown up to phase)")
        else:
            print("verification failed; nothing written")
    return EXIT_OK if res.code is not None else EXIT_FAIL


def cmd_verify(args) -> int:
    from .pipeline import verify_eacws

    try:
        code = load_code(args.code)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"bad code file: {exc}") from exc
    report = verify_eacws(code, args.wmax, args.threads)
    data = report.to_json()
    if args.format == "json":
        _emit(json.dumps(data, indent=2), args.out)
    else:
        lines = [f"code {code.params}: {'PASS' if report.passed else 'FAIL'}"]
        lines += [f"  {k}: {v}" for k, v in report.stages.items()]
        lines.append(f"  distance: {data['distance']} (swept to weight {report.wmax})")
        if report.first_failure is not None:
            lines.append(f"  witness: {render_pauli(report.first_failure)}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_reproduce(args) -> int:
    from .reproduce import format_line, run_all

    results = run_all()
    for r in results:
        print(format_line(r))
    print(f"{sum(r.passed for r in results)}/{len(results)} criteria pass")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ebitforge", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_opts(sp):
        sp.add_argument("--graph", metavar="FILE", help="graph file: 'n <count>' then 'u v' edges")
        sp.add_argument("--ring", type=int, metavar="N", help="use the N-vertex ring instead of a file")
        sp.add_argument("--ebits", type=int, default=0, metavar="C")

    def out_opts(sp):
        sp.add_argument("--format", choices=["json", "table"], default="table")
        sp.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("gens", help="print standard-form generators")
    graph_opts(sp), out_opts(sp)
    sp.set_defaults(func=cmd_gens)

    sp = sub.add_parser("induce", help="print induced classical errors")
    graph_opts(sp), out_opts(sp)
    sp.add_argument("--weight", type=int, required=True, metavar="T")
    sp.set_defaults(func=cmd_induce)

    sp = sub.add_parser("search", help="search for a code and verify it")
    graph_opts(sp), out_opts(sp)
    sp.add_argument("--weight", type=int, required=True, metavar="T")
    sp.add_argument("--mode", choices=["detect", "correct"], default="detect")
    sp.add_argument("--target-k", type=int, metavar="K")
    sp.add_argument("--budget", type=int, metavar="NODES")
    sp.add_argument("--threads", type=int, default=1, metavar="N")
    sp.add_argument("--span", action="append", metavar="VEC",
                    help="restrict candidates to the span of these aaaa|bb vectors (repeatable)")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="verify a code file by dense simulation")
    sp.add_argument("code", metavar="CODE_FILE")
    sp.add_argument("--wmax", type=int, metavar="W")
    sp.add_argument("--threads", type=int, default=1, metavar="N")
    out_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reproduce", help="rebuild both published example codes")
    sp.set_defaults(func=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ebitforge: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"ebitforge: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
