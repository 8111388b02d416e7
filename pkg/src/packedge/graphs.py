"""Core graph machinery: subcubic graphs, edge distances, conflict graphs, graph6 I/O.

Edge distance is line-graph distance: d(e, e) = 0, edges sharing a vertex are
at distance 1, and in general d(e, f) = 1 + (minimum vertex distance between an
endpoint of e and an endpoint of f) for e != f.  Under this metric a color
class of radius 1 (pairwise distance >= 2) is exactly a matching.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

EdgeId = int

GRAPH6_MAX_N = 258047  # largest order representable with the 1- or 4-byte header


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph6Error(GraphError):
    """Malformed graph6 data; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph:
    """Immutable undirected simple graph with indexed vertices and edges.

    Vertices are 0..n-1.  Edges are normalized to (u, v) with u < v and sorted
    lexicographically; the position of a pair in ``edges`` is its EdgeId and is
    stable for the lifetime of the graph.  Construction rejects loops and
    duplicate edges but not high degrees: the graph6 reader must accept
    arbitrary simple graphs, so operations that need (sub)cubic input check
    ``is_cubic`` / ``is_subcubic`` themselves.

    Instances never mutate after construction; the distance caches below are
    filled lazily but idempotently, so sharing across threads is safe.
    """

    __slots__ = ("n", "edges", "_neighbors", "_incident", "_edge_ids",
                 "_edge_dist", "_le_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for i in range(1, len(norm)):
            if norm[i] == norm[i - 1]:
                raise GraphError(f"duplicate edge {norm[i]}")
        self.n = n
        self.edges = tuple(norm)
        nbr: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        ids: dict[tuple[int, int], int] = {}
        for i, (u, v) in enumerate(self.edges):
            nbr[u].append(v)
            nbr[v].append(u)
            inc[u].append(i)
            inc[v].append(i)
            ids[(u, v)] = i
        self._neighbors = tuple(tuple(sorted(a)) for a in nbr)
        self._incident = tuple(tuple(a) for a in inc)
        self._edge_ids = ids
        self._edge_dist: list[list[int]] | None = None
        self._le_masks: dict[int, list[int]] = {}

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def incident_edges(self, v: int) -> tuple[EdgeId, ...]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._neighbors), default=0)

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(a) == 3 for a in self._neighbors)

    def is_subcubic(self) -> bool:
        return all(len(a) <= 3 for a in self._neighbors)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        q = deque([0])
        cnt = 1
        while q:
            u = q.popleft()
            for w in self._neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    cnt += 1
                    q.append(w)
        return cnt == self.n

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_ids

    def edge_id(self, u: int, v: int) -> EdgeId:
        try:
            return self._edge_ids[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"no edge ({u},{v})") from None

    def check_edge_id(self, e: EdgeId) -> None:
        if not (isinstance(e, int) and 0 <= e < self.m):
            raise GraphError(f"invalid edge id {e!r} (m={self.m})")

    # --- distance machinery -------------------------------------------------

    def _edge_distance_rows(self) -> list[list[int]]:
        """All-pairs line-graph distances; -1 for unreachable pairs."""
        rows = self._edge_dist
        if rows is None:
            m = self.m
            ladj: list[list[int]] = [[] for _ in range(m)]
            for v in range(self.n):
                inc = self._incident[v]
                for i in range(len(inc)):
                    for j in range(i + 1, len(inc)):
                        ladj[inc[i]].append(inc[j])
                        ladj[inc[j]].append(inc[i])
            rows = []
            for s in range(m):
                dist = [-1] * m
                dist[s] = 0
                q = deque([s])
                while q:
                    a = q.popleft()
                    da = dist[a] + 1
                    for b in ladj[a]:
                        if dist[b] < 0:
                            dist[b] = da
                            q.append(b)
                rows.append(dist)
            self._edge_dist = rows
        return rows

    def distance_le_masks(self, radius: int) -> list[int]:
        """Per-edge bitmask of the *other* edges at distance <= radius.

        Cached per radius; this is the table the solver consults in its
        innermost loop.
        """
        if radius < 0:
            raise GraphError("radius must be nonnegative")
        masks = self._le_masks.get(radius)
        if masks is None:
            rows = self._edge_distance_rows()
            masks = []
            for e in range(self.m):
                mask = 0
                row = rows[e]
                for f in range(self.m):
                    if f != e and 0 <= row[f] <= radius:
                        mask |= 1 << f
                masks.append(mask)
            self._le_masks[radius] = masks
        return masks


def edge_distance(g: Graph, e: EdgeId, f: EdgeId) -> int | float:
    """Line-graph distance between two edges; math.inf across components."""
    g.check_edge_id(e)
    g.check_edge_id(f)
    d = g._edge_distance_rows()[e][f]
    return math.inf if d < 0 else d


class ConflictGraph:
    """Graph on a subset of edges of a base graph, adjacent when close.

    Vertices are the edge ids in ``subset``; two of them are adjacent exactly
    when their distance in the base graph is at most ``radius``.
    """

    __slots__ = ("base", "subset", "radius", "_adj")

    def __init__(self, base: Graph, subset: tuple[EdgeId, ...], radius: int,
                 adj: dict[EdgeId, tuple[EdgeId, ...]]):
        self.base = base
        self.subset = subset
        self.radius = radius
        self._adj = adj

    @property
    def n_vertices(self) -> int:
        return len(self.subset)

    def neighbors(self, e: EdgeId) -> tuple[EdgeId, ...]:
        return self._adj[e]

    def degree(self, e: EdgeId) -> int:
        return len(self._adj[e])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj.values()), default=0)

    def edge_pairs(self) -> list[tuple[EdgeId, EdgeId]]:
        out = []
        for e, nbrs in self._adj.items():
            for f in nbrs:
                if e < f:
                    out.append((e, f))
        return out

    @property
    def n_edges(self) -> int:
        return len(self.edge_pairs())

    def components(self) -> list[list[EdgeId]]:
        seen: set[EdgeId] = set()
        comps = []
        for start in self.subset:
            if start in seen:
                continue
            comp = []
            q = deque([start])
            seen.add(start)
            while q:
                a = q.popleft()
                comp.append(a)
                for b in self._adj[a]:
                    if b not in seen:
                        seen.add(b)
                        q.append(b)
            comps.append(sorted(comp))
        return comps

    def __repr__(self) -> str:
        return (f"ConflictGraph(radius={self.radius}, vertices={self.n_vertices}, "
                f"edges={self.n_edges})")


def conflict_graph(g: Graph, subset: Sequence[EdgeId], k: int) -> ConflictGraph:
    """Build the radius-k conflict graph on a set of edge ids."""
    if k < 1:
        raise GraphError("conflict radius must be >= 1")
    sub = tuple(subset)
    seen: set[EdgeId] = set()
    for e in sub:
        g.check_edge_id(e)
        if e in seen:
            raise GraphError(f"duplicate edge id {e} in subset")
        seen.add(e)
    rows = g._edge_distance_rows()
    adj: dict[EdgeId, tuple[EdgeId, ...]] = {}
    for e in sub:
        row = rows[e]
        adj[e] = tuple(f for f in sub if f != e and 0 <= row[f] <= k)
    return ConflictGraph(g, sub, k, adj)


# --- graph6 ------------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def _coerce_bytes(data: bytes | str) -> bytes:
    if isinstance(data, str):
        try:
            return data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error(f"graph6 data must be ASCII: {exc}") from None
    return bytes(data)


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6-encoded graph (bit-exact, strict padding checks).

    Accepts the optional ``>>graph6<<`` prefix and a trailing newline.  Both
    the 1-byte header (n <= 62) and the 4-byte header (n <= 258047) are
    understood.  Degree is not restricted here; callers that need subcubic
    input check the predicate separately.
    """
    raw = _coerce_bytes(data)
    if raw.startswith(_G6_HEADER):
        raw = raw[len(_G6_HEADER):]
    raw = raw.rstrip(b"\r\n")
    if not raw:
        raise Graph6Error("empty graph6 data", 0)

    def val(i: int) -> int:
        b = raw[i]
        if not (63 <= b <= 126):
            raise Graph6Error(f"byte {b} outside graph6 range 63..126", i)
        return b - 63

    pos = 0
    if raw[0] == 126:  # '~'
        if len(raw) >= 2 and raw[1] == 126:
            raise Graph6Error("8-byte size header (n > 258047) not supported", 0)
        if len(raw) < 4:
            raise Graph6Error("truncated 4-byte size header", len(raw))
        n = (val(1) << 12) | (val(2) << 6) | val(3)
        pos = 4
    else:
        n = val(0)
        pos = 1

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(raw) - pos}",
            min(pos + nbytes, len(raw)))
    edges = []
    bit = 0
    i, j = 0, 1  # current upper-triangle cell, column-major
    for bi in range(nbytes):
        group = val(pos + bi)
        for sh in range(5, -1, -1):
            b = (group >> sh) & 1
            if bit < nbits:
                if b:
                    edges.append((i, j))
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif b:
                raise Graph6Error("nonzero padding bits", pos + bi)
            bit += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> bytes:
    """Encode a graph as graph6 bytes (no header prefix, no newline)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise GraphError(f"graphs with more than {GRAPH6_MAX_N} vertices are not supported")
    if n <= 62:
        head = bytes([63 + n])
    else:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    nbits = n * (n - 1) // 2
    bits = bytearray((nbits + 5) // 6)
    for u, v in g.edges:
        t = v * (v - 1) // 2 + u  # column-major upper triangle position
        bits[t // 6] |= 1 << (5 - t % 6)
    return head + bytes(63 + b for b in bits)


# --- edge-list text format -----------------------------------------------------

def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse the "u v" per-line text format (0-indexed, '#' comments allowed).

    The vertex count is inferred as max index + 1 unless given explicitly.
    """
    edges = []
    hi = -1
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
        hi = max(hi, u, v)
    count = hi + 1 if n is None else n
    return Graph(count, edges)


def encode_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)
