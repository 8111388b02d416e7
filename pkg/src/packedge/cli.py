"""Command-line surface: solve, construct, verify, gen, scan, seq.

Exit codes: 0 success/colorable, 10 not colorable (or verification failed),
20 budget exhausted, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import glob
import json
import logging
import os
import sys

from . import constructive
from .certificates import (CertificateError, certificate_from_coloring,
                           certificate_from_outcome, dumps,
                           intermediates_from_plan, load_certificate,
                           verify_certificate)
from .factors import NoTwoFactorError
from .families import FAMILIES, FamilySpec, generate
from .graphs import (Graph, GraphError, encode_edge_list, encode_graph6,
                     parse_edge_list, parse_graph6)
from .sequences import sequence_table
from .solver import PackingSequence, Status, scan_corpus, solve

EXIT_OK = 0
EXIT_NOT_COLORABLE = 10
EXIT_TIMEOUT = 20
EXIT_USAGE = 2

_STATUS_EXIT = {
    Status.COLORABLE: EXIT_OK,
    Status.NOT_COLORABLE: EXIT_NOT_COLORABLE,
    Status.TIMEOUT: EXIT_TIMEOUT,
}

CORPUS_ENV = "PACKEDGE_CORPUS"


class UsageError(Exception):
    pass


def _read_graph(path: str, fmt: str) -> Graph:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    try:
        if fmt == "edges":
            return parse_edge_list(data.decode("utf-8"))
        lines = [ln for ln in data.splitlines() if ln.strip()]
        if not lines:
            raise GraphError("no graph in input")
        return parse_graph6(lines[0])
    except (GraphError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read graph from {path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(str(exc)) from None
    else:
        sys.stdout.write(text)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True, help="graph file, or - for stdin")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")


def _add_budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="packedge",
                                 description="S-packing edge-colorings of subcubic graphs")
    ap.add_argument("-v", "--verbose", action="store_true", help="log at INFO level")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide colorability by exhaustive search")
    _add_graph_args(p)
    p.add_argument("--sequence", required=True, help='radius spec, e.g. "1,1,2,2" or "1^2,2^5"')
    _add_budget_args(p)
    p.add_argument("--out", help="write the certificate JSON here instead of stdout")

    p = sub.add_parser("construct", help="build a coloring from a 2-factor construction")
    _add_graph_args(p)
    p.add_argument("--theorem", required=True,
                   choices=("1112", "11133", "1114x5", "11k", "1k", "1113", "1122"))
    p.add_argument("--k", type=int, default=None, help="radius for 11k / 1k")
    p.add_argument("--budget", type=int, default=None,
                   help="declared radius-k color count for 1k")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="re-check a colorable certificate")
    p.add_argument("--certificate", required=True, help="certificate file, or - for stdin")

    p = sub.add_parser("gen", help="emit a named or parametric graph")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("--out")

    p = sub.add_parser("scan", help="solve one sequence over a directory of .g6 files")
    p.add_argument("--corpus", default=None,
                   help=f"directory of graph6 files (default ${CORPUS_ENV})")
    p.add_argument("--sequence", required=True)
    _add_budget_args(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the JSONL report here instead of stdout")

    p = sub.add_parser("seq", help="print the bound sequences as exact integer tables")
    p.add_argument("--table", required=True, choices=("a", "b", "c"))
    p.add_argument("--max-k", type=int, required=True)
    return ap


def cmd_solve(args) -> int:
    g = _read_graph(args.graph, args.format)
    try:
        seq = PackingSequence.parse(args.sequence)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    outcome = solve(g, seq, budget_nodes=args.budget_nodes,
                    budget_seconds=args.budget_seconds)
    _emit(dumps(certificate_from_outcome(g, seq, outcome)), args.out)
    return _STATUS_EXIT[outcome.status]


def cmd_construct(args) -> int:
    g = _read_graph(args.graph, args.format)
    needs_k = args.theorem in ("11k", "1k")
    if needs_k and args.k is None:
        raise UsageError(f"--theorem {args.theorem} needs --k")
    try:
        if args.theorem == "1112":
            coloring = constructive.construct_1112(g)
        elif args.theorem == "11133":
            coloring = constructive.construct_11133(g)
        elif args.theorem == "1114x5":
            coloring = constructive.construct_1114x5(g)
        elif args.theorem == "11k":
            coloring = constructive.construct_11k(g, args.k)
        elif args.theorem == "1k":
            coloring = constructive.construct_1k(g, args.k, budget=args.budget)
        elif args.theorem == "1113":
            coloring = constructive.construct_1113_oddness2(g)
            if coloring is None:
                _emit(json.dumps({"status": "not_applicable",
                                  "method": "construct_1113_oddness2"}) + "\n", args.out)
                return EXIT_NOT_COLORABLE
        else:  # 1122
            partition = constructive.two_matching_color(g)
            if partition is None:
                _emit(json.dumps({"status": "not_colorable",
                                  "method": "two_matching_color",
                                  "sequence": [1, 1, 2, 2]}) + "\n", args.out)
                return EXIT_NOT_COLORABLE
            coloring = constructive.matching_partition_to_coloring(partition)
    except (NoTwoFactorError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    plan = getattr(coloring, "plan", None)
    if plan is not None:
        cert = certificate_from_coloring(coloring, plan.method,
                                         intermediates_from_plan(plan))
    else:
        cert = certificate_from_coloring(coloring, "two_matching_color")
    _emit(dumps(cert), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.certificate == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.certificate, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    try:
        cert = load_certificate(text)
        result = verify_certificate(cert)
    except CertificateError as exc:
        raise UsageError(f"bad certificate: {exc}") from None
    if result.ok:
        print("certificate verifies")
        return EXIT_OK
    print(f"certificate INVALID: {result.violation}", file=sys.stderr)
    return EXIT_NOT_COLORABLE


def cmd_gen(args) -> int:
    params = {}
    for name in ("n", "k", "i"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    try:
        g = generate(FamilySpec(args.family, params))
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "edges":
        _emit(encode_edge_list(g), args.out)
    else:
        _emit(encode_graph6(g).decode("ascii") + "\n", args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    corpus = args.corpus or os.environ.get(CORPUS_ENV)
    if not corpus:
        raise UsageError(f"no --corpus given and ${CORPUS_ENV} is not set")
    if not os.path.isdir(corpus):
        raise UsageError(f"corpus directory {corpus!r} does not exist")
    paths = sorted(glob.glob(os.path.join(corpus, "*.g6")))
    try:
        seq = PackingSequence.parse(args.sequence)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    entries, summary = scan_corpus(paths, seq, budget_nodes=args.budget_nodes,
                                   budget_seconds=args.budget_seconds, jobs=args.jobs)
    _emit("".join(json.dumps(e, sort_keys=True) + "\n" for e in entries), args.out)
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    if summary["errors"]:
        return EXIT_USAGE
    if summary["timeout"]:
        return EXIT_TIMEOUT
    if summary["not_colorable"]:
        return EXIT_NOT_COLORABLE
    return EXIT_OK


def cmd_seq(args) -> int:
    if args.max_k < 1:
        raise UsageError("--max-k must be >= 1")
    for k, value in sequence_table(args.table, args.max_k):
        print(f"{k}\t{value}")
    return EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "scan": cmd_scan,
    "seq": cmd_seq,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
