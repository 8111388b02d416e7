"""Perfect matchings, 2-factors, vertex labelings, and typed edge sets.

In a cubic graph a 2-factor (spanning disjoint union of cycles) is exactly the
complement of a perfect matching, so 2-factors are enumerated by enumerating
matchings.  Two kinds of edge sets inside a 2-factor drive the constructive
colorings:

* type I: exactly one edge on each odd cycle, nothing on even cycles
  (an odd-cycle edge transversal);
* type II: pairwise non-adjacent edges with floor(len/2) edges on every cycle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import EdgeId, Graph, GraphError


class NoTwoFactorError(Exception):
    """The graph has no perfect matching, hence no 2-factor."""


@dataclass(frozen=True)
class TwoFactor:
    """A 2-factor given by its cycles plus the complementary perfect matching.

    Each cycle is a vertex sequence starting at its smallest vertex and
    continuing toward the smaller neighbor, cycles sorted by first vertex, so
    equal factors compare equal.
    """
    graph: Graph
    cycles: tuple[tuple[int, ...], ...]
    matching: tuple[EdgeId, ...]

    def cycle_edges(self, idx: int) -> tuple[EdgeId, ...]:
        cyc = self.cycles[idx]
        g = self.graph
        return tuple(g.edge_id(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))

    def odd_cycles(self) -> list[int]:
        return [i for i, c in enumerate(self.cycles) if len(c) % 2 == 1]

    def cycle_of_vertex(self) -> dict[int, int]:
        out = {}
        for i, cyc in enumerate(self.cycles):
            for v in cyc:
                out[v] = i
        return out

    def cycle_of_edge(self) -> dict[EdgeId, int]:
        out = {}
        for i in range(len(self.cycles)):
            for e in self.cycle_edges(i):
                out[e] = i
        return out

    def factor_edges(self) -> tuple[EdgeId, ...]:
        return tuple(sorted(e for i in range(len(self.cycles)) for e in self.cycle_edges(i)))

    def matching_partner(self) -> dict[int, int]:
        out = {}
        for e in self.matching:
            u, v = self.graph.edges[e]
            out[u] = v
            out[v] = u
        return out


def enumerate_perfect_matchings(g: Graph) -> Iterator[tuple[EdgeId, ...]]:
    """Yield every perfect matching exactly once, as sorted edge-id tuples.

    Backtracks over vertices in index order: the smallest unmatched vertex is
    matched along its incident edges in edge-id order, which fixes the
    enumeration order used for tie-breaking everywhere else.
    """
    if not g.is_cubic():
        raise GraphError("perfect matching enumeration needs a cubic graph")
    n = g.n
    matched = [False] * n
    chosen: list[EdgeId] = []

    def bt(lo: int) -> Iterator[tuple[EdgeId, ...]]:
        u = lo
        while u < n and matched[u]:
            u += 1
        if u == n:
            yield tuple(sorted(chosen))
            return
        matched[u] = True
        for e in g.incident_edges(u):
            a, b = g.edges[e]
            w = b if a == u else a
            if not matched[w]:
                matched[w] = True
                chosen.append(e)
                yield from bt(u + 1)
                chosen.pop()
                matched[w] = False
        matched[u] = False

    yield from bt(0)


def two_factor_from_matching(g: Graph, matching: Sequence[EdgeId]) -> TwoFactor:
    """Decompose the complement of a perfect matching into cycles."""
    m = tuple(sorted(matching))
    seen: set[EdgeId] = set()
    covered = [False] * g.n
    for e in m:
        g.check_edge_id(e)
        if e in seen:
            raise GraphError(f"duplicate edge id {e} in matching")
        seen.add(e)
        u, v = g.edges[e]
        if covered[u] or covered[v]:
            raise GraphError("edges do not form a matching")
        covered[u] = covered[v] = True
    if not all(covered):
        raise GraphError("matching is not perfect")
    in_matching = set(m)
    factor_nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if e not in in_matching:
            factor_nbrs[u].append(v)
            factor_nbrs[v].append(u)
    if any(len(a) != 2 for a in factor_nbrs):
        raise GraphError("matching complement is not 2-regular (graph must be cubic)")
    visited = [False] * g.n
    cycles: list[tuple[int, ...]] = []
    for start in range(g.n):
        if visited[start]:
            continue
        cyc = [start]
        visited[start] = True
        prev = -1
        cur = start
        nxt = min(factor_nbrs[start])
        while nxt != start:
            cyc.append(nxt)
            visited[nxt] = True
            a, b = factor_nbrs[nxt]
            prev, cur = cur, nxt
            nxt = b if a == prev else a
        if len(cyc) < 3:
            raise GraphError("degenerate cycle in 2-factor")
        cycles.append(tuple(cyc))
    return TwoFactor(g, tuple(cycles), m)


def enumerate_two_factors(g: Graph) -> Iterator[TwoFactor]:
    for pm in enumerate_perfect_matchings(g):
        yield two_factor_from_matching(g, pm)


def min_odd_two_factor(g: Graph) -> tuple[TwoFactor, int]:
    """Exhaustively find a 2-factor with the fewest odd cycles.

    Ties go to the first factor in matching enumeration order.  The second
    return value is the oddness of the graph.
    """
    best: TwoFactor | None = None
    best_odd = -1
    for factor in enumerate_two_factors(g):
        nodd = len(factor.odd_cycles())
        if best is None or nodd < best_odd:
            best, best_odd = factor, nodd
            if nodd == 0:
                break
    if best is None:
        raise NoTwoFactorError("graph has no perfect matching, hence no 2-factor")
    return best, best_odd


# --- vertex labeling --------------------------------------------------------------

@dataclass(frozen=True)
class VertexLabeling:
    """Plus/minus labels on the vertices of the odd cycles of a 2-factor.

    A vertex is plus when one of its neighbors lies on a *different odd* cycle
    of the factor; edges to even cycles or within the own cycle do not count.
    """
    factor: TwoFactor
    labels: dict[int, bool]  # vertex -> True for plus

    def is_plus(self, v: int) -> bool:
        return self.labels[v]


def label_vertices(factor: TwoFactor) -> VertexLabeling:
    g = factor.graph
    odd = set(factor.odd_cycles())
    cyc_of = factor.cycle_of_vertex()
    labels: dict[int, bool] = {}
    for ci in odd:
        for v in factor.cycles[ci]:
            labels[v] = any(
                cyc_of[w] != ci and cyc_of[w] in odd for w in g.neighbors(v))
    return VertexLabeling(factor, labels)


# --- forbidden three-cycle configuration ------------------------------------------

def _has_path_all_vertices(adj: dict[int, set[int]]) -> bool:
    """Does this tiny graph have a Hamiltonian path?"""
    verts = list(adj)

    def extend(v: int, remaining: set[int]) -> bool:
        if not remaining:
            return True
        return any(w in remaining and extend(w, remaining - {w}) for w in adj[v])

    return any(extend(v, set(verts) - {v}) for v in verts)


def check_p5_property(factor: TwoFactor) -> bool:
    """True when no triple of edges from three distinct odd cycles induces a
    subgraph containing a path with five edges.

    With the six endpoints of three vertex-disjoint edges, a five-edge path is
    exactly a Hamiltonian path of the induced subgraph; triples are enumerated
    outright.  Minimum-odd-cycle 2-factors always pass.
    """
    g = factor.graph
    odd = factor.odd_cycles()
    if len(odd) < 3:
        return True
    edge_lists = {ci: factor.cycle_edges(ci) for ci in odd}
    for c1, c2, c3 in itertools.combinations(odd, 3):
        for e1 in edge_lists[c1]:
            for e2 in edge_lists[c2]:
                for e3 in edge_lists[c3]:
                    verts = set(g.edges[e1]) | set(g.edges[e2]) | set(g.edges[e3])
                    adj = {v: {w for w in g.neighbors(v) if w in verts} for v in verts}
                    if _has_path_all_vertices(adj):
                        return False
    return True


# --- typed edge sets ---------------------------------------------------------------

@dataclass(frozen=True)
class TypedEdgeSet:
    factor: TwoFactor
    kind: str  # "type1" or "type2"
    edges: tuple[EdgeId, ...]


def is_type1(factor: TwoFactor, edges: Sequence[EdgeId]) -> bool:
    """One edge on each odd cycle, none anywhere else."""
    cyc_of = factor.cycle_of_edge()
    counts = {ci: 0 for ci in range(len(factor.cycles))}
    for e in edges:
        ci = cyc_of.get(e)
        if ci is None:
            return False
        counts[ci] += 1
    odd = set(factor.odd_cycles())
    return all(c == (1 if ci in odd else 0) for ci, c in counts.items())


def is_type2(factor: TwoFactor, edges: Sequence[EdgeId]) -> bool:
    """Pairwise non-adjacent, floor(len/2) edges on every cycle of the factor."""
    g = factor.graph
    cyc_of = factor.cycle_of_edge()
    counts = {ci: 0 for ci in range(len(factor.cycles))}
    seen_vertices: set[int] = set()
    for e in edges:
        ci = cyc_of.get(e)
        if ci is None:
            return False
        counts[ci] += 1
        u, v = g.edges[e]
        if u in seen_vertices or v in seen_vertices:
            return False  # two set edges share a vertex
        seen_vertices.add(u)
        seen_vertices.add(v)
    return all(counts[ci] == len(cyc) // 2 for ci, cyc in enumerate(factor.cycles))


def make_type1(factor: TwoFactor, edges: Sequence[EdgeId]) -> TypedEdgeSet:
    edges = tuple(sorted(edges))
    if not is_type1(factor, edges):
        raise GraphError("edge set is not of type I for this factor")
    return TypedEdgeSet(factor, "type1", edges)


def find_type1_set(factor: TwoFactor, k: int, max_degree: int) -> TypedEdgeSet | None:
    """Search for a type-I set whose radius-k conflict graph has bounded degree.

    Backtracks over one edge choice per odd cycle.  Candidate edges are
    ordered with edges joining two same-labeled consecutive vertices first
    (the choice the constructive proofs make), then the rest in cycle order;
    correctness rests on the exhaustive search, not the ordering.  None is
    returned only after all combinations failed.
    """
    g = factor.graph
    odd = factor.odd_cycles()
    if not odd:
        return TypedEdgeSet(factor, "type1", ())
    labeling = label_vertices(factor)
    rows = g._edge_distance_rows()

    candidates: list[list[EdgeId]] = []
    for ci in odd:
        cyc = factor.cycles[ci]
        edges = factor.cycle_edges(ci)
        preferred, rest = [], []
        for pos, e in enumerate(edges):
            u, v = cyc[pos], cyc[(pos + 1) % len(cyc)]
            (preferred if labeling.is_plus(u) == labeling.is_plus(v) else rest).append(e)
        candidates.append(preferred + rest)

    chosen: list[EdgeId] = []
    degrees: list[int] = []

    def bt(i: int) -> bool:
        if i == len(candidates):
            return True
        for e in candidates[i]:
            row = rows[e]
            new_deg = 0
            ok = True
            for j, f in enumerate(chosen):
                if 0 <= row[f] <= k:
                    if degrees[j] + 1 > max_degree:
                        ok = False
                        break
                    new_deg += 1
            if not ok or new_deg > max_degree:
                continue
            for j, f in enumerate(chosen):
                if 0 <= row[f] <= k:
                    degrees[j] += 1
            chosen.append(e)
            degrees.append(new_deg)
            if bt(i + 1):
                return True
            chosen.pop()
            degrees.pop()
            for j, f in enumerate(chosen):
                if 0 <= row[f] <= k:
                    degrees[j] -= 1
        return False

    if bt(0):
        return TypedEdgeSet(factor, "type1", tuple(sorted(chosen)))
    return None


def partition_type2(factor: TwoFactor,
                    exclude: TypedEdgeSet | Sequence[EdgeId] | None = None
                    ) -> tuple[TypedEdgeSet, TypedEdgeSet]:
    """Split the factor edges outside ``exclude`` into two type-II sets.

    Even cycles alternate their edges between the two sets.  An odd cycle must
    carry exactly one excluded (type I) edge; the remaining even-length path is
    alternated starting next to that edge, so the two edges adjacent to it land
    in different sets and the output is deterministic.
    """
    if exclude is None:
        excl: set[EdgeId] = set()
    elif isinstance(exclude, TypedEdgeSet):
        excl = set(exclude.edges)
    else:
        excl = set(exclude)
    if excl and not is_type1(factor, tuple(excl)):
        raise GraphError("excluded set is not of type I for this factor")
    b: list[EdgeId] = []
    c: list[EdgeId] = []
    for ci, cyc in enumerate(factor.cycles):
        edges = factor.cycle_edges(ci)
        length = len(edges)
        marked = [e in excl for e in edges]
        if length % 2 == 0:
            if any(marked):
                raise GraphError("excluded edge on an even cycle")
            for pos, e in enumerate(edges):
                (b if pos % 2 == 0 else c).append(e)
        else:
            if sum(marked) != 1:
                raise GraphError(f"odd cycle {ci} needs exactly one excluded edge")
            start = marked.index(True)
            for step in range(1, length):
                e = edges[(start + step) % length]
                (b if step % 2 == 1 else c).append(e)
    return (TypedEdgeSet(factor, "type2", tuple(sorted(b))),
            TypedEdgeSet(factor, "type2", tuple(sorted(c))))


# --- random sampling (for the bound-checking property tests) -----------------------

def random_type1_set(factor: TwoFactor, rng) -> TypedEdgeSet:
    edges = tuple(sorted(rng.choice(factor.cycle_edges(ci)) for ci in factor.odd_cycles()))
    return TypedEdgeSet(factor, "type1", edges)


def random_type2_set(factor: TwoFactor, rng) -> TypedEdgeSet:
    """Uniform maximum matching per cycle: even cycles have two alternations,
    odd cycles one per uncovered vertex."""
    out: list[EdgeId] = []
    for ci, cyc in enumerate(factor.cycles):
        edges = factor.cycle_edges(ci)
        length = len(edges)
        if length % 2 == 0:
            off = rng.randrange(2)
            out.extend(edges[(off + 2 * t) % length] for t in range(length // 2))
        else:
            gap = rng.randrange(length)  # position left uncovered
            out.extend(edges[(gap + 1 + 2 * t) % length] for t in range(length // 2))
    return TypedEdgeSet(factor, "type2", tuple(sorted(out)))
