"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own machinery: distances
come from networkx shortest paths on an explicitly built line graph, matchings
from brute-force subset enumeration, and the reference packing-coloring
decision from full assignment enumeration.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from packedge import (Graph, flower_snark, generalized_petersen, obstruction12,
                      petersen, prism, tietze)


def k4() -> Graph:
    return Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def k33() -> Graph:
    return Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])


def triangle_square_pentagon() -> Graph:
    """Cubic graph whose natural 2-factor is C3 + C4 + C5 with the triangle's
    matching edges all landing on the even square: its odd-cycle labeling is
    all-minus."""
    return Graph(12, [
        (0, 1), (1, 2), (0, 2),                     # triangle
        (3, 4), (4, 5), (5, 6), (3, 6),             # square
        (7, 8), (8, 9), (9, 10), (10, 11), (7, 11),  # pentagon
        (0, 3), (1, 4), (2, 5),                     # triangle -> square
        (6, 7), (8, 10), (9, 11),                   # square -> pentagon, chords
    ])


def two_pentagon_pairs() -> Graph:
    """Twenty vertices, four 5-cycles in a 2-factor, and three cross edges
    arranged so that one edge triple from three different odd cycles induces a
    five-edge path (the forbidden configuration for minimum-odd factors)."""
    edges = []
    for off in (0, 10):
        for i in range(5):
            edges.append((off + i, off + (i + 1) % 5))                # outer C5
            edges.append((off + 5 + i, off + 5 + (i + 2) % 5))        # inner C5
    # kept spokes: left 0-5, 3-8, 4-9; right 11-16, 12-17, 13-18
    edges += [(0, 5), (3, 8), (4, 9), (11, 16), (12, 17), (13, 18)]
    # cross edges replacing the dropped spokes
    edges += [(2, 14), (1, 15), (7, 19), (6, 10)]
    return Graph(20, edges)


TSP_MATCHING_PAIRS = [(0, 3), (1, 4), (2, 5), (6, 7), (8, 10), (9, 11)]
TPP_MATCHING_PAIRS = [(0, 5), (3, 8), (4, 9), (11, 16), (12, 17), (13, 18),
                      (2, 14), (1, 15), (7, 19), (6, 10)]


def fixture_corpus() -> dict[str, Graph]:
    """Bridgeless cubic graphs with a 2-factor (>= 20 of them)."""
    graphs: dict[str, Graph] = {
        "petersen": petersen(),
        "tietze": tietze(),
        "flower5": flower_snark(5),
        "flower7": flower_snark(7),
        "prism3": prism(3),
        "prism4": prism(4),
        "k4": k4(),
        "k33": k33(),
    }
    for n in range(5, 10):
        for k in range(1, (n + 1) // 2):
            if (n, k) == (5, 2):
                continue  # that's the Petersen graph
            graphs[f"gp{n}_{k}"] = generalized_petersen(n, k)
    return graphs


def small_fixture_corpus(max_n: int = 16) -> dict[str, Graph]:
    graphs = {name: g for name, g in fixture_corpus().items() if g.n <= max_n}
    graphs["obstruction12"] = obstruction12()
    graphs["tsp"] = triangle_square_pentagon()
    return graphs


@pytest.fixture(scope="session")
def corpus() -> dict[str, Graph]:
    return fixture_corpus()


# --- independent oracles -------------------------------------------------------

def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def nx_edge_distances(g: Graph) -> dict:
    """All-pairs line-graph distances via networkx, keyed by sorted pairs."""
    line = nx.line_graph(to_nx(g))
    line = nx.relabel_nodes(line, {e: tuple(sorted(e)) for e in line.nodes()})
    return dict(nx.all_pairs_shortest_path_length(line))


def oracle_edge_distance(dists: dict, e: tuple, f: tuple):
    e, f = tuple(sorted(e)), tuple(sorted(f))
    return dists[e].get(f, float("inf"))


def brute_perfect_matchings(g: Graph) -> list[tuple[int, ...]]:
    """Every perfect matching by brute force over edge subsets."""
    if g.n % 2:
        return []
    out = []
    for combo in itertools.combinations(range(g.m), g.n // 2):
        seen: set[int] = set()
        ok = True
        for e in combo:
            u, v = g.edges[e]
            if u in seen or v in seen:
                ok = False
                break
            seen.add(u)
            seen.add(v)
        if ok and len(seen) == g.n:
            out.append(combo)
    return out


def naive_colorable(g: Graph, radii: tuple[int, ...]) -> bool:
    """Reference decision: enumerate all k^m assignments and check each class
    pairwise with networkx distances."""
    dists = nx_edge_distances(g)
    edges = list(g.edges)
    k = len(radii)
    for assignment in itertools.product(range(k), repeat=g.m):
        ok = True
        for color in range(k):
            members = [edges[e] for e in range(g.m) if assignment[e] == color]
            need = radii[color] + 1
            for a, b in itertools.combinations(members, 2):
                if oracle_edge_distance(dists, a, b) < need:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def random_subcubic(rng: random.Random, max_edges: int = 8) -> Graph:
    """Random simple graph with max degree 3 and at most max_edges edges."""
    n = rng.randint(2, 8)
    target = rng.randint(1, max_edges)
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    for _ in range(200):
        if len(edges) >= target:
            break
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e in edges or deg[u] >= 3 or deg[v] >= 3:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
    return Graph(n, sorted(edges))


def random_sequence(rng: random.Random, max_colors: int = 3) -> tuple[int, ...]:
    k = rng.randint(1, max_colors)
    return tuple(sorted(rng.randint(1, 4) for _ in range(k)))
