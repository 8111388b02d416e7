"""Named graphs and parametric families used as fixtures and CLI generators."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, GraphError


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer n-cycle 0..n-1, inner vertices n..2n-1 with step k,
    spokes i -- n+i."""
    if n < 3:
        raise GraphError("generalized Petersen graph needs n >= 3")
    if not (1 <= k < n / 2):
        raise GraphError("generalized Petersen graph needs 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def prism(n: int) -> Graph:
    """Circular ladder: two n-cycles joined by a perfect matching (= GP(n, 1))."""
    return generalized_petersen(n, 1)


def flower_snark(n: int) -> Graph:
    """Flower snark on 4n vertices, n odd >= 3.

    Hubs 0..n-1; tip cycle n..2n-1; the 2n remaining tips 2n..4n-1 form a
    single 2n-cycle u_0..u_{n-1}, v_0..v_{n-1}.  Hub i is adjacent to t_i,
    u_i, v_i.
    """
    if n < 3 or n % 2 == 0:
        raise GraphError("flower snark needs odd n >= 3")
    edges = []
    for i in range(n):
        edges.append((i, n + i))
        edges.append((i, 2 * n + i))
        edges.append((i, 3 * n + i))
        edges.append((n + i, n + (i + 1) % n))
    for i in range(n - 1):
        edges.append((2 * n + i, 2 * n + i + 1))
        edges.append((3 * n + i, 3 * n + i + 1))
    edges.append((3 * n - 1, 3 * n))  # u_{n-1} -- v_0
    edges.append((4 * n - 1, 2 * n))  # v_{n-1} -- u_0
    return Graph(4 * n, edges)


#: Tietze graph: the Petersen graph GP(5,2) with vertex 0 (neighbors 1, 4, 5)
#: expanded into the triangle {0, 10, 11}; 0 keeps neighbor 1, 10 takes
#: neighbor 4, 11 takes neighbor 5.  12 vertices, 18 edges, one triangle,
#: bridgeless, not 3-edge-colorable.
_TIETZE_EDGES = [
    (0, 1), (10, 4), (11, 5), (0, 10), (10, 11), (0, 11),
    (1, 2), (2, 3), (3, 4), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (6, 8), (7, 9), (5, 8), (6, 9),
]


def tietze() -> Graph:
    return Graph(12, _TIETZE_EDGES)


#: The smallest cubic graph with no (1,1,2,2,2)- and no (1,2^6)-packing
#: edge-coloring (12 vertices, found by exhaustive search).  Transcribed from
#: its standard drawing: K4 minus the edge {1,2} on vertices 0..3, a hub 4
#: adjacent to 1, 2 and to vertex 5 of a 7-vertex block on 5..11.  The edge
#: (4,5) is a bridge.
_OBSTRUCTION12_EDGES = [
    (0, 1), (1, 3), (0, 3), (0, 2), (2, 4), (1, 4), (2, 3),
    (4, 5), (5, 6), (6, 10), (8, 10), (8, 11), (5, 7), (7, 9),
    (9, 10), (7, 8), (6, 11), (9, 11),
]


def obstruction12() -> Graph:
    return Graph(12, _OBSTRUCTION12_EDGES)


def _grow_leaves(n: int, edges: list[tuple[int, int]], rounds: int) -> Graph:
    """Add two leaves on every degree-1 vertex, ``rounds`` times.

    New vertices are numbered in increasing order of their parent, so the
    whole construction is reproducible (BFS order from the original center).
    """
    for _ in range(rounds):
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        leaves = sorted(v for v in range(n) if deg.get(v, 0) == 1)
        for leaf in leaves:
            edges.append((leaf, n))
            edges.append((leaf, n + 1))
            n += 2
    return Graph(n, edges)


def tree_odd(i: int) -> Graph:
    """Leaf-doubling tree with line-graph diameter 2i - 1.

    Starts from the claw K_{1,3} (center 0); each round adds two leaves on
    every degree-1 vertex.  Edge count 3*(2^i - 1).
    """
    if i < 1:
        raise GraphError("tree index must be >= 1")
    return _grow_leaves(4, [(0, 1), (0, 2), (0, 3)], i - 1)


def tree_even(i: int) -> Graph:
    """Leaf-doubling tree with line-graph diameter 2i.

    Starts from K_{1,3} with two extra leaves on vertex 1; grows like
    ``tree_odd``.  Edge count 2^(i+2) - 3.
    """
    if i < 1:
        raise GraphError("tree index must be >= 1")
    return _grow_leaves(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], i - 1)


def line_graph_diameter(g: Graph) -> int:
    """Largest edge distance over all edge pairs; needs a connected graph."""
    if g.m < 1:
        raise GraphError("need at least one edge")
    if not g.is_connected():
        raise GraphError("graph must be connected")
    rows = g._edge_distance_rows()
    return max(max(row) for row in rows)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters, resolvable via :func:`generate`."""
    family: str
    params: dict = field(default_factory=dict)


#: family name -> (constructor, required parameter names)
FAMILIES = {
    "petersen": (petersen, ()),
    "tietze": (tietze, ()),
    "gp": (generalized_petersen, ("n", "k")),
    "flower": (flower_snark, ("n",)),
    "prism": (prism, ("n",)),
    "tree-odd": (tree_odd, ("i",)),
    "tree-even": (tree_even, ("i",)),
    "obstruction12": (obstruction12, ()),
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a FamilySpec."""
    try:
        ctor, wanted = FAMILIES[spec.family]
    except KeyError:
        raise GraphError(f"unknown family {spec.family!r}; know {sorted(FAMILIES)}") from None
    missing = [p for p in wanted if p not in spec.params]
    if missing:
        raise GraphError(f"family {spec.family!r} needs parameters {wanted}")
    extra = set(spec.params) - set(wanted)
    if extra:
        raise GraphError(f"family {spec.family!r} does not take {sorted(extra)}")
    return ctor(**{p: spec.params[p] for p in wanted})
