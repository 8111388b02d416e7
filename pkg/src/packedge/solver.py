"""Exact S-packing edge-colorability: verifier, decision solver, corpus scans.

A sequence S = (s_1, ..., s_k) is non-decreasing; a coloring is a partition of
the edge set into classes X_1..X_k with every pair of distinct edges in X_i at
distance >= s_i + 1.  ``solve`` is a complete backtracking search: a Colorable
answer carries a verified coloring, a NotColorable answer means the search
space was exhausted, and exhausted budgets surface as Timeout, never as
NotColorable.

The search inner loop lives in a compiled Cython kernel when available, with a
pure-Python fallback selected at import (override with PACKEDGE_KERNEL=python
or =cython).  Both kernels explore the identical tree.
"""

from __future__ import annotations

import math
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from . import _kernel_py
from .graphs import ConflictGraph, EdgeId, Graph, Graph6Error, GraphError, parse_graph6

try:
    from . import _kernel as _kernel_cy
except ImportError:  # extension not built: pure-Python fallback
    _kernel_cy = None


def available_kernels() -> dict:
    """Kernel name -> search callable, for everything importable here."""
    kernels = {"python": _kernel_py.search}
    if _kernel_cy is not None:
        kernels["cython"] = _kernel_cy.search
    return kernels


def default_kernel() -> str:
    """Kernel picked at import: PACKEDGE_KERNEL override, else cython if built."""
    kernels = available_kernels()
    env = os.environ.get("PACKEDGE_KERNEL")
    if env:
        if env not in kernels:
            raise ValueError(f"PACKEDGE_KERNEL={env!r} but only {sorted(kernels)} available")
        return env
    return "cython" if "cython" in kernels else "python"


# --- sequences -----------------------------------------------------------------

_TERM_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


class PackingSequence:
    """Non-decreasing sequence of positive radii, one per color.

    Supports the exponent shorthand in ``parse``/``compact``: "1^2,2^5" means
    (1,1,2,2,2,2,2).
    """

    __slots__ = ("radii",)

    def __init__(self, radii: Iterable[int]):
        radii = tuple(int(r) for r in radii)
        if not radii:
            raise ValueError("sequence must be non-empty")
        if any(r < 1 for r in radii):
            raise ValueError("radii must be positive integers")
        if any(radii[i] > radii[i + 1] for i in range(len(radii) - 1)):
            raise ValueError("sequence must be non-decreasing")
        self.radii = radii

    @classmethod
    def parse(cls, text: str) -> "PackingSequence":
        radii: list[int] = []
        for term in text.split(","):
            term = term.strip()
            m = _TERM_RE.match(term)
            if not m:
                raise ValueError(f"bad sequence term {term!r}; expected r or r^m")
            r = int(m.group(1))
            count = int(m.group(2)) if m.group(2) else 1
            if count < 1:
                raise ValueError(f"bad repetition count in {term!r}")
            radii.extend([r] * count)
        return cls(radii)

    def compact(self) -> str:
        parts = []
        i = 0
        while i < len(self.radii):
            j = i
            while j < len(self.radii) and self.radii[j] == self.radii[i]:
                j += 1
            run = j - i
            parts.append(f"{self.radii[i]}^{run}" if run > 1 else f"{self.radii[i]}")
            i = j
        return ",".join(parts)

    def prev_same_radius(self) -> tuple[int, ...]:
        """Per color, the previous color of equal radius, or -1 (for the kernels)."""
        out = []
        for i, r in enumerate(self.radii):
            out.append(i - 1 if i > 0 and self.radii[i - 1] == r else -1)
        return tuple(out)

    def __len__(self) -> int:
        return len(self.radii)

    def __iter__(self):
        return iter(self.radii)

    def __getitem__(self, i):
        return self.radii[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, PackingSequence) and self.radii == other.radii

    def __hash__(self) -> int:
        return hash(self.radii)

    def __repr__(self) -> str:
        return f"PackingSequence({self.radii})"


def as_sequence(seq) -> PackingSequence:
    if isinstance(seq, PackingSequence):
        return seq
    if isinstance(seq, str):
        return PackingSequence.parse(seq)
    return PackingSequence(seq)


# --- colorings and verification --------------------------------------------------

@dataclass(frozen=True)
class Violation:
    edge: EdgeId
    other: EdgeId
    color: int
    distance: float  # may be math.inf across components


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.ok


class PackingColoring:
    """Total assignment of edges to 1-based color indices against a sequence."""

    __slots__ = ("graph", "sequence", "assignment")

    def __init__(self, graph: Graph, sequence, assignment: Sequence[int]):
        sequence = as_sequence(sequence)
        assignment = tuple(int(c) for c in assignment)
        if len(assignment) != graph.m:
            raise GraphError(
                f"assignment covers {len(assignment)} edges, graph has {graph.m}")
        k = len(sequence)
        if any(not (1 <= c <= k) for c in assignment):
            raise GraphError(f"color indices must lie in 1..{k}")
        self.graph = graph
        self.sequence = sequence
        self.assignment = assignment

    def color_class(self, color: int) -> list[EdgeId]:
        return [e for e, c in enumerate(self.assignment) if c == color]

    def __eq__(self, other) -> bool:
        return (isinstance(other, PackingColoring)
                and self.graph == other.graph
                and self.sequence == other.sequence
                and self.assignment == other.assignment)

    def __repr__(self) -> str:
        return f"PackingColoring({self.sequence.compact()!r}, m={len(self.assignment)})"


def verify(coloring: PackingColoring) -> VerifyResult:
    """Check every color class pairwise; report the first violation found.

    Classes are scanned in color order and pairs in edge-index order, so the
    reported violation is deterministic.
    """
    g = coloring.graph
    rows = g._edge_distance_rows()
    for color, radius in enumerate(coloring.sequence, start=1):
        members = coloring.color_class(color)
        for i, e in enumerate(members):
            row = rows[e]
            for f in members[i + 1:]:
                d = row[f]
                dist = math.inf if d < 0 else d
                if dist < radius + 1:
                    return VerifyResult(False, Violation(e, f, color, dist))
    return VerifyResult(True)


# --- exact solver ----------------------------------------------------------------

class Status(Enum):
    COLORABLE = "colorable"
    NOT_COLORABLE = "not_colorable"
    TIMEOUT = "timeout"


@dataclass
class SolveOutcome:
    status: Status
    coloring: PackingColoring | None
    nodes: int
    seconds: float


def solve(g: Graph, sequence, budget_nodes: int | None = None,
          budget_seconds: float | None = None, kernel: str | None = None) -> SolveOutcome:
    """Decide S-packing edge-colorability by complete backtracking.

    Colorable outcomes carry a coloring that is re-verified in-process before
    being returned.  NotColorable is only reported after the search exhausted
    every branch; hitting a budget yields Timeout instead.
    """
    seq = as_sequence(sequence)
    name = kernel if kernel is not None else default_kernel()
    try:
        fn = available_kernels()[name]
    except KeyError:
        raise ValueError(f"unknown kernel {name!r}") from None
    masks = [g.distance_le_masks(r) for r in seq.radii]
    bn = -1 if budget_nodes is None else int(budget_nodes)
    bs = -1.0 if budget_seconds is None else float(budget_seconds)
    t0 = time.perf_counter()
    code, colors, nodes = fn(g.m, masks, seq.prev_same_radius(), bn, bs)
    seconds = time.perf_counter() - t0
    if code == _kernel_py.COLORABLE:
        pc = PackingColoring(g, seq, colors)
        res = verify(pc)
        if not res.ok:
            raise RuntimeError(f"kernel {name} produced an invalid coloring: {res.violation}")
        return SolveOutcome(Status.COLORABLE, pc, nodes, seconds)
    if code == _kernel_py.NOT_COLORABLE:
        return SolveOutcome(Status.NOT_COLORABLE, None, nodes, seconds)
    return SolveOutcome(Status.TIMEOUT, None, nodes, seconds)


# --- conflict-graph coloring ------------------------------------------------------

def _degeneracy_order(h: ConflictGraph) -> list[EdgeId]:
    """Smallest-last vertex order (ties by edge id); good for greedy coloring."""
    deg = {e: h.degree(e) for e in h.subset}
    alive = set(h.subset)
    removed = []
    while alive:
        v = min(alive, key=lambda e: (deg[e], e))
        removed.append(v)
        alive.remove(v)
        for w in h.neighbors(v):
            if w in alive:
                deg[w] -= 1
    removed.reverse()
    return removed


def _greedy_color(h: ConflictGraph, order: list[EdgeId]) -> dict[EdgeId, int]:
    colors: dict[EdgeId, int] = {}
    for v in order:
        used = {colors[w] for w in h.neighbors(v) if w in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _exact_color_component(h: ConflictGraph, comp: list[EdgeId],
                           max_colors: int) -> dict[EdgeId, int] | None:
    """Complete backtracking coloring of one component, with the usual
    new-color-indices-in-order symmetry breaking."""
    order = [v for v in _degeneracy_order(h) if v in set(comp)]
    nbrs = {v: [w for w in h.neighbors(v) if w in set(comp)] for v in comp}
    colors: dict[EdgeId, int] = {}

    def bt(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[w] for w in nbrs[v] if w in colors}
        limit = min(max_colors, used + 1)
        for c in range(1, limit + 1):
            if c not in taken:
                colors[v] = c
                if bt(i + 1, max(used, c)):
                    return True
                del colors[v]
        return False

    return dict(colors) if bt(0, 0) else None


def color_conflict_graph(h: ConflictGraph, max_colors: int) -> dict[EdgeId, int] | None:
    """Proper vertex coloring of a conflict graph with at most max_colors colors.

    Greedy on a degeneracy order first; when that exceeds the budget, an exact
    per-component search settles it.  None means no coloring exists.
    """
    if max_colors < 1:
        raise GraphError("max_colors must be >= 1")
    if not h.subset:
        return {}
    greedy = _greedy_color(h, _degeneracy_order(h))
    if max(greedy.values()) <= max_colors:
        return greedy
    out: dict[EdgeId, int] = {}
    for comp in h.components():
        got = _exact_color_component(h, comp, max_colors)
        if got is None:
            return None
        out.update(got)
    return out


# --- corpus scanning ---------------------------------------------------------------

def _scan_file(path: str, radii: tuple[int, ...], budget_nodes: int | None,
               budget_seconds: float | None) -> list[dict]:
    entries: list[dict] = []
    seq = PackingSequence(radii)
    try:
        with open(path, "rb") as fh:
            lines = fh.readlines()
    except OSError as exc:
        return [{"path": path, "error": str(exc)}]
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        entry: dict = {"path": path, "line": lineno}
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            entry["error"] = str(exc)
            entries.append(entry)
            continue
        out = solve(g, seq, budget_nodes=budget_nodes, budget_seconds=budget_seconds)
        entry.update(n=g.n, m=g.m, sequence=seq.compact(), status=out.status.value,
                     nodes=out.nodes)
        entries.append(entry)
    return entries


def scan_corpus(paths: Iterable[str], sequence, budget_nodes: int | None = None,
                budget_seconds: float | None = None, jobs: int = 1):
    """Solve one sequence over many graph6 files (possibly many graphs per file).

    Files are processed in sorted path order and the report order is
    deterministic regardless of worker scheduling.  Parse failures are
    reported per graph and do not stop the scan.  Returns (entries, summary).
    """
    seq = as_sequence(sequence)
    ordered = sorted(str(p) for p in paths)
    if jobs <= 1:
        per_file = [_scan_file(p, seq.radii, budget_nodes, budget_seconds)
                    for p in ordered]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_file = list(pool.map(
                _scan_file, ordered,
                [seq.radii] * len(ordered),
                [budget_nodes] * len(ordered),
                [budget_seconds] * len(ordered)))
    entries = [e for chunk in per_file for e in chunk]

    def ident(e: dict) -> str:
        return f"{e['path']}:{e.get('line', '?')}"

    summary = {
        "files": len(ordered),
        "graphs": sum(1 for e in entries if "status" in e),
        "sequence": seq.compact(),
        "colorable": sum(1 for e in entries if e.get("status") == "colorable"),
        "not_colorable": [ident(e) for e in entries if e.get("status") == "not_colorable"],
        "timeout": [ident(e) for e in entries if e.get("status") == "timeout"],
        "errors": [ident(e) for e in entries if "error" in e],
    }
    return entries, summary
