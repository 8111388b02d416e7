"""Constructive colorings: budgets, verification, fallback-free selection rules."""

import itertools
import logging

import pytest

from packedge import (GraphError, NoTwoFactorError, Status,
                      check_1122_necessary, conflict_graph, construct_1112,
                      construct_11133, construct_1113_oddness2,
                      construct_1114x5, construct_11k, construct_1k,
                      enumerate_two_factors, flower_snark,
                      generalized_petersen, matching_partition_to_coloring,
                      min_odd_two_factor, obstruction12, petersen, prism,
                      solve, tietze, two_matching_color, verify)
from packedge.constructive import assemble, ConstructionPlan, RadiusKPart
from conftest import (fixture_corpus, k4, k33, small_fixture_corpus,
                      triangle_square_pentagon)


def radii_of(coloring) -> tuple[int, ...]:
    return coloring.sequence.radii


@pytest.fixture(autouse=True)
def no_falsifier_warnings(caplog):
    """The selection rules must never trip their fallback on these graphs."""
    with caplog.at_level(logging.WARNING, logger="packedge.constructive"):
        yield
    assert not [r for r in caplog.records if "falsifier" in r.getMessage()]


class TestAssemble:
    def test_degenerate_matching_only_plan(self):
        from packedge import Graph
        g = Graph(4, [(0, 1), (2, 3)])  # 1-regular
        plan = ConstructionPlan(g, "degenerate", 2, ((0, 1),), ())
        coloring = assemble(plan)
        assert radii_of(coloring) == (1,)
        assert verify(coloring).ok

    def test_partition_violations_rejected(self):
        from packedge import Graph
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(GraphError):
            assemble(ConstructionPlan(g, "bad", 2, ((0, 1), (1,)), ()))  # overlap
        with pytest.raises(GraphError):
            assemble(ConstructionPlan(g, "bad", 2, ((0,),), ()))  # misses edge 1


class TestTheorem1112:
    def test_petersen(self):
        coloring = construct_1112(petersen())
        assert radii_of(coloring) == (1, 1, 1, 2)
        assert verify(coloring).ok

    def test_k4_oddness_zero(self):
        coloring = construct_1112(k4())
        assert radii_of(coloring) == (1, 1, 1, 2)
        assert verify(coloring).ok
        assert coloring.color_class(4) == []  # radius-2 class empty

    def test_tietze(self):
        assert verify(construct_1112(tietze())).ok

    def test_corpus_with_transversal_independence(self, corpus):
        extra = {"obstruction12": obstruction12(), "tsp": triangle_square_pentagon()}
        for name, g in sorted({**corpus, **extra}.items()):
            coloring = construct_1112(g)
            assert verify(coloring).ok, name
            a_class = coloring.color_class(4)
            assert conflict_graph(g, a_class, 2).n_edges == 0, name


class TestTheorem11133:
    @pytest.mark.parametrize("name", sorted(fixture_corpus()))
    def test_corpus(self, corpus, name):
        g = corpus[name]
        coloring = construct_11133(g)
        assert radii_of(coloring) == (1, 1, 1, 3, 3)
        assert verify(coloring).ok
        a_class = coloring.color_class(4) + coloring.color_class(5)
        if a_class:
            assert conflict_graph(g, a_class, 3).max_degree() <= 1

    def test_oddness_zero_leaves_radius3_empty(self):
        coloring = construct_11133(prism(4))
        assert verify(coloring).ok
        assert coloring.color_class(4) == [] and coloring.color_class(5) == []

    def test_all_minus_labeling_graph(self):
        assert verify(construct_11133(triangle_square_pentagon())).ok


class TestTheorem1114x5:
    @pytest.mark.parametrize("name", sorted(fixture_corpus()))
    def test_corpus(self, corpus, name):
        g = corpus[name]
        coloring = construct_1114x5(g)
        assert radii_of(coloring) == (1, 1, 1, 4, 4, 4, 4, 4)
        assert verify(coloring).ok
        a_class = [e for c in range(4, 9) for e in coloring.color_class(c)]
        if a_class:
            assert conflict_graph(g, a_class, 4).max_degree() <= 4

    def test_all_minus_labeling_graph(self):
        assert verify(construct_1114x5(triangle_square_pentagon())).ok


class TestTheorem11k:
    def test_petersen_k2_generic_budget(self):
        coloring = construct_11k(petersen(), 2)
        assert radii_of(coloring) == (1, 1) + (2,) * 8  # a_2 + b_2 + 2
        assert verify(coloring).ok

    def test_order_12_sharp_budget(self):
        for g in (tietze(), flower_snark(5)):
            coloring = construct_11k(g, 2)
            assert radii_of(coloring) == (1, 1, 2, 2, 2, 2, 2)  # (1,1,2^5)
            assert verify(coloring).ok

    def test_three_edge_colorable_budget(self):
        coloring = construct_11k(k4(), 2)
        assert radii_of(coloring) == (1, 1) + (2,) * 5  # b_2 + 1
        assert verify(coloring).ok
        coloring = construct_11k(prism(7), 3)
        assert radii_of(coloring) == (1, 1) + (3,) * 9  # b_3 + 1
        assert verify(coloring).ok

    def test_k3_and_k4_budgets_on_snark(self):
        g = tietze()
        coloring = construct_11k(g, 3)
        assert radii_of(coloring) == (1, 1) + (3,) * 11  # 2 + b_3 + 1
        assert verify(coloring).ok
        coloring = construct_11k(g, 4)
        assert radii_of(coloring) == (1, 1) + (4,) * 26  # 5 + b_4 + 1
        assert verify(coloring).ok

    def test_generic_large_k(self):
        from packedge import type1_degree_bound, type2_degree_bound
        budget = type1_degree_bound(5) + type2_degree_bound(5) + 2
        assert budget == 62  # 20 + 40 + 2
        coloring = construct_11k(petersen(), 5)
        assert radii_of(coloring) == (1, 1) + (5,) * budget
        assert verify(coloring).ok

    def test_bad_k(self):
        with pytest.raises(ValueError):
            construct_11k(petersen(), 1)


class TestTheorem1k:
    def test_petersen_k2_within_generic_budget(self):
        coloring = construct_1k(petersen(), 2)
        radii = radii_of(coloring)
        assert radii[0] == 1 and set(radii[1:]) == {2}
        assert len(radii) - 1 <= 13  # a_2 + 2 b_2 + 3
        assert verify(coloring).ok

    def test_three_edge_colorable_k2(self):
        coloring = construct_1k(k4(), 2)
        assert radii_of(coloring) == (1,) + (2,) * 10  # 2 b_2 + 2
        assert verify(coloring).ok
        assert all(c == 1 or coloring.sequence[c - 1] == 2
                   for c in coloring.assignment)

    def test_order_12_sharp_budget(self):
        coloring = construct_1k(tietze(), 2)
        assert radii_of(coloring) == (1,) + (2,) * 9  # 1 + 4 + 4
        assert verify(coloring).ok

    def test_explicit_budget_padding(self):
        coloring = construct_1k(tietze(), 2, budget=13)
        assert radii_of(coloring) == (1,) + (2,) * 13
        assert verify(coloring).ok
        with pytest.raises(GraphError):
            construct_1k(tietze(), 2, budget=3)

    def test_k3_snark(self):
        coloring = construct_1k(tietze(), 3)
        assert radii_of(coloring) == (1,) + (3,) * 20  # 2 + 9 + 9
        assert verify(coloring).ok


class TestOddnessTwoCases:
    def test_flower5(self):
        coloring = construct_1113_oddness2(flower_snark(5))
        assert coloring is not None
        assert radii_of(coloring) == (1, 1, 1, 3)
        assert verify(coloring).ok

    def test_petersen_not_applicable(self):
        assert construct_1113_oddness2(petersen()) is None

    def test_tietze_not_applicable(self):
        assert construct_1113_oddness2(tietze()) is None

    def test_no_witness_is_domain_error(self):
        with pytest.raises(GraphError):
            construct_1113_oddness2(k4())  # every 2-factor is a single C4

    def test_non_cubic_rejected(self):
        from packedge import Graph
        with pytest.raises(GraphError):
            construct_1113_oddness2(Graph(3, [(0, 1), (1, 2)]))


class TestOddnessTwoCounting:
    def test_long_cycle_distance_count(self):
        # property behind case i: an edge of the near odd cycle is within
        # distance 3 of at most twelve edges of the far cycle
        from packedge import edge_distance
        for g in (flower_snark(5), flower_snark(7), generalized_petersen(13, 2)):
            for factor in enumerate_two_factors(g):
                odd = factor.odd_cycles()
                if len(odd) != 2:
                    continue
                lens = [len(factor.cycles[ci]) for ci in odd]
                far = odd[0] if lens[0] >= lens[1] else odd[1]
                near = odd[1] if far == odd[0] else odd[0]
                if len(factor.cycles[far]) < 13:
                    continue
                far_edges = factor.cycle_edges(far)
                for e in factor.cycle_edges(near):
                    close = sum(1 for f in far_edges
                                if edge_distance(g, e, f) <= 3)
                    assert close <= 12
                break  # one qualifying factor per graph keeps this quick


class TestTwoMatching:
    def test_k4_partition(self):
        p = two_matching_color(k4())
        assert p is not None
        assert {len(p.part_a), len(p.part_b)} == {2}
        # brute-force oracle: count valid bipartitions up to swap
        g = k4()
        valid = 0
        for bits in itertools.product((0, 1), repeat=g.n):
            if bits[0] != 0:
                continue
            ok = all(sum(1 for w in g.neighbors(v) if bits[w] == bits[v]) == 1
                     for v in range(g.n))
            valid += ok
        assert valid == 3  # one per perfect matching of K4
        coloring = matching_partition_to_coloring(p)
        assert radii_of(coloring) == (1, 1, 2, 2)
        assert verify(coloring).ok

    def test_petersen_not_two_matching_colorable(self):
        assert two_matching_color(petersen()) is None

    def test_order_not_divisible_by_four(self):
        # necessary condition: |V| % 4 == 0
        for g in (prism(3), k33()):
            assert g.n % 4 != 0
            assert two_matching_color(g) is None

    def test_equivalence_with_solver_on_small_corpus(self):
        for name, g in sorted(small_fixture_corpus(14).items()):
            if not g.is_cubic():
                continue
            p = two_matching_color(g)
            s = solve(g, "1,1,2,2")
            assert (p is not None) == (s.status is Status.COLORABLE), name
            if p is not None:
                coloring = matching_partition_to_coloring(p)
                assert verify(coloring).ok, name
                three_ec, div4 = check_1122_necessary(g)
                assert three_ec and div4, name

    def test_check_1122_necessary_values(self):
        assert check_1122_necessary(petersen()) == (False, False)
        assert check_1122_necessary(k4()) == (True, True)
        assert check_1122_necessary(prism(4)) == (True, True)
        assert check_1122_necessary(k33()) == (True, False)


class TestNoTwoFactor:
    def test_constructions_raise(self):
        from packedge import Graph
        g = Graph(16, [
            (0, 1), (0, 2), (0, 3),
            (1, 4), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (7, 1),
            (2, 8), (8, 9), (8, 10), (9, 10), (9, 11), (10, 11), (11, 2),
            (3, 12), (12, 13), (12, 14), (13, 14), (13, 15), (14, 15), (15, 3),
        ])
        for fn in (construct_1112, construct_11133, construct_1114x5):
            with pytest.raises(NoTwoFactorError):
                fn(g)
        with pytest.raises(NoTwoFactorError):
            construct_11k(g, 2)
        with pytest.raises(NoTwoFactorError):
            construct_1113_oddness2(g)
