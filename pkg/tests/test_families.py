"""Family generators: named graphs, parameter validation, tree diameters."""

import pytest

from packedge import (FamilySpec, Graph, GraphError, flower_snark,
                      generalized_petersen, generate, line_graph_diameter,
                      obstruction12, petersen, prism, tietze, tree_even,
                      tree_odd, tree_edge_count)
from conftest import to_nx

import networkx as nx


def test_gp_is_petersen():
    assert generalized_petersen(5, 2) == petersen()


def test_gp_canonical_numbering():
    g = generalized_petersen(7, 2)
    assert g.n == 14
    for i in range(7):
        assert g.has_edge(i, (i + 1) % 7)
        assert g.has_edge(i, 7 + i)
        assert g.has_edge(7 + i, 7 + (i + 2) % 7)


def test_gp_parameter_validation():
    with pytest.raises(GraphError):
        generalized_petersen(2, 1)
    with pytest.raises(GraphError):
        generalized_petersen(5, 0)
    with pytest.raises(GraphError):
        generalized_petersen(6, 3)  # k < n/2 required


def test_prism_is_gp_n_1():
    assert prism(4) == generalized_petersen(4, 1)
    assert prism(3).is_cubic() and prism(3).n == 6


def test_flower_snark_basics():
    g = flower_snark(7)
    assert g.n == 28 and g.m == 42
    assert g.is_cubic() and g.is_connected()
    with pytest.raises(GraphError):
        flower_snark(4)
    with pytest.raises(GraphError):
        flower_snark(1)


def test_flower3_is_tietze_up_to_isomorphism():
    assert nx.is_isomorphic(to_nx(flower_snark(3)), to_nx(tietze()))


def test_tietze_structure():
    g = tietze()
    assert g.n == 12 and g.m == 18 and g.is_cubic()
    tri = [(u, v, w) for u in range(12) for v in range(u + 1, 12)
           for w in range(v + 1, 12)
           if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)]
    assert tri == [(0, 10, 11)]
    assert not list(nx.bridges(to_nx(g)))


def test_obstruction12_structure():
    g = obstruction12()
    assert g.n == 12 and g.m == 18 and g.is_cubic() and g.is_connected()
    assert list(nx.bridges(to_nx(g))) == [(4, 5)]


def test_tree_edge_counts_match_formula():
    for i in range(1, 7):
        assert tree_odd(i).m == tree_edge_count(i) == 3 * (2 ** i - 1)
        assert tree_even(i).m == tree_edge_count(i, even_diameter=True) == 2 ** (i + 2) - 3


def test_trees_are_subcubic_trees():
    for i in range(1, 6):
        for g in (tree_odd(i), tree_even(i)):
            assert g.is_subcubic() and not g.is_cubic()
            assert g.is_connected() and g.m == g.n - 1


def test_tree_line_graph_diameters():
    for i in range(1, 7):
        assert line_graph_diameter(tree_odd(i)) == 2 * i - 1
        assert line_graph_diameter(tree_even(i)) == 2 * i


def test_line_graph_diameter_edge_cases():
    assert line_graph_diameter(Graph(2, [(0, 1)])) == 0
    with pytest.raises(GraphError):
        line_graph_diameter(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError):
        line_graph_diameter(Graph(3, []))


def test_named_families_cubic_connected():
    for g in (petersen(), tietze(), flower_snark(5), prism(4),
              generalized_petersen(7, 2), obstruction12()):
        assert g.is_cubic() and g.is_connected()


def test_even_order_gp_instances_are_3_edge_colorable():
    from packedge import Status, solve
    for g in (generalized_petersen(4, 1), generalized_petersen(8, 2),
              generalized_petersen(8, 3), generalized_petersen(12, 2)):
        assert g.n % 4 == 0
        assert solve(g, "1,1,1").status is Status.COLORABLE


def test_generate_dispatch():
    assert generate(FamilySpec("petersen")) == petersen()
    assert generate(FamilySpec("gp", {"n": 5, "k": 2})) == petersen()
    assert generate(FamilySpec("tree-odd", {"i": 2})).m == 9
    with pytest.raises(GraphError):
        generate(FamilySpec("nope"))
    with pytest.raises(GraphError):
        generate(FamilySpec("gp", {"n": 5}))
    with pytest.raises(GraphError):
        generate(FamilySpec("petersen", {"n": 5}))
