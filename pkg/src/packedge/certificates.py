"""Self-contained JSON certificates for solver and construction results.

A colorable certificate carries everything needed to re-check it in a fresh
process: the graph6 encoding (plus its SHA-256 for transport integrity), the
radius sequence, and the assignment as (vertex pair, color) entries.
Non-colorable and timeout certificates record the outcome and search stats.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .graphs import Graph, GraphError, encode_graph6, parse_graph6
from .solver import (PackingColoring, PackingSequence, SolveOutcome, Status,
                     VerifyResult, verify)

SCHEMA_VERSION = 1


class CertificateError(ValueError):
    """Malformed or internally inconsistent certificate."""


def _graph_fields(g: Graph) -> dict[str, str]:
    g6 = encode_graph6(g)
    return {"graph": g6.decode("ascii"),
            "graph_sha256": hashlib.sha256(g6).hexdigest()}


def certificate_from_coloring(coloring: PackingColoring, method: str,
                              intermediates: dict | None = None,
                              stats: dict | None = None) -> dict:
    cert: dict[str, Any] = {"schema_version": SCHEMA_VERSION}
    cert.update(_graph_fields(coloring.graph))
    cert["sequence"] = list(coloring.sequence)
    cert["status"] = Status.COLORABLE.value
    cert["assignment"] = [[list(coloring.graph.edges[e]), c]
                          for e, c in enumerate(coloring.assignment)]
    cert["method"] = method
    if intermediates:
        cert["intermediates"] = intermediates
    cert["stats"] = stats or {}
    return cert


def certificate_from_outcome(g: Graph, sequence, outcome: SolveOutcome,
                             method: str = "exact_solver") -> dict:
    from .solver import as_sequence
    seq = as_sequence(sequence)
    stats = {"nodes": outcome.nodes, "seconds": round(outcome.seconds, 6)}
    if outcome.status is Status.COLORABLE:
        return certificate_from_coloring(outcome.coloring, method, stats=stats)
    cert: dict[str, Any] = {"schema_version": SCHEMA_VERSION}
    cert.update(_graph_fields(g))
    cert["sequence"] = list(seq)
    cert["status"] = outcome.status.value
    cert["method"] = method
    cert["stats"] = stats
    return cert


def intermediates_from_plan(plan) -> dict:
    """Audit trail for constructive certificates: the 2-factor and the typed
    edge sets, all as vertex pairs."""
    g = plan.graph

    def pairs(edge_ids) -> list[list[int]]:
        return [list(g.edges[e]) for e in sorted(edge_ids)]

    out: dict[str, Any] = {
        "radius_one_sets": [pairs(s) for s in plan.ones],
        "radius_k_sets": [pairs(p.edges) for p in plan.parts],
        "radius_k_budgets": [p.budget for p in plan.parts],
    }
    if plan.factor is not None:
        out["two_factor_cycles"] = [list(c) for c in plan.factor.cycles]
        out["complementary_matching"] = pairs(plan.factor.matching)
    return out


def dumps(cert: dict) -> str:
    return json.dumps(cert, indent=2, sort_keys=True) + "\n"


def load_certificate(text: str) -> dict:
    try:
        cert = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"not valid JSON: {exc}") from None
    if not isinstance(cert, dict):
        raise CertificateError("certificate must be a JSON object")
    if cert.get("schema_version") != SCHEMA_VERSION:
        raise CertificateError(
            f"unsupported schema_version {cert.get('schema_version')!r}")
    for key in ("graph", "graph_sha256", "sequence", "status"):
        if key not in cert:
            raise CertificateError(f"missing field {key!r}")
    return cert


def coloring_from_certificate(cert: dict) -> PackingColoring:
    """Rebuild the coloring of a colorable certificate from its own fields."""
    if cert["status"] != Status.COLORABLE.value:
        raise CertificateError(
            f"certificate status is {cert['status']!r}; nothing to verify")
    g6 = cert["graph"].encode("ascii")
    digest = hashlib.sha256(g6).hexdigest()
    if digest != cert["graph_sha256"]:
        raise CertificateError("graph_sha256 does not match the graph6 payload")
    g = parse_graph6(g6)
    try:
        seq = PackingSequence(cert["sequence"])
    except ValueError as exc:
        raise CertificateError(f"bad sequence: {exc}") from None
    assignment = [0] * g.m
    seen = [False] * g.m
    entries = cert.get("assignment")
    if not isinstance(entries, list):
        raise CertificateError("colorable certificate must carry an assignment")
    for item in entries:
        try:
            (u, v), color = item
            e = g.edge_id(int(u), int(v))
        except (ValueError, TypeError, GraphError) as exc:
            raise CertificateError(f"bad assignment entry {item!r}: {exc}") from None
        if seen[e]:
            raise CertificateError(f"edge ({u},{v}) assigned twice")
        seen[e] = True
        assignment[e] = int(color)
    if not all(seen):
        raise CertificateError("assignment does not cover every edge")
    try:
        return PackingColoring(g, seq, assignment)
    except GraphError as exc:
        raise CertificateError(str(exc)) from None


def verify_certificate(cert: dict) -> VerifyResult:
    """Re-check a colorable certificate from the JSON alone."""
    return verify(coloring_from_certificate(cert))
