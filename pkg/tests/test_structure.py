import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mgx.graph import MixedGraph, cycle_graph, cycle_space_dim, delete_vertices, path_graph
from mgx.matching import matching_number, max_matching_avoiding
from mgx.spectra import Inertia, graph_charpoly, graph_inertia
from mgx.structure import (
    StructureError,
    UnicyclicCase,
    cactus_decomposition,
    characterize_inertia_min,
    characterize_n_minus_max,
    characterize_p_plus_max,
    check_extremal_consequences,
    classification_summary,
    classify_unicyclic,
    contracted_tree_condition,
    cycle_attachment_edges,
    cycle_inertia_formula,
    cycle_rank_formula,
    in_class_g,
    inertia_bounds,
    literal_even_signs,
    predict_coefficient_signs,
)

from conftest import mixed_graphs

C4_PENDANT = MixedGraph.build(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
DIRECTED_C4 = MixedGraph.build(4, [], [(0, 1), (1, 2), (2, 3), (3, 0)])
TRIANGLE_TAIL = MixedGraph.build(5, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4)])


def joined_sigma2_triangles() -> MixedGraph:
    # two triangles with sigma = 2, joined by the edge 2-3
    return MixedGraph.build(6, [(2, 0), (5, 3), (2, 3)], [(0, 1), (1, 2), (3, 4), (4, 5)])


class TestCycleFormulas:
    @pytest.mark.parametrize("n,sigma,want", [(4, 0, (1, 1)), (3, 0, (1, 2)), (3, 2, (2, 1))])
    def test_inertia_examples(self, n, sigma, want):
        got = cycle_inertia_formula(n, sigma)
        assert (got.p_plus, got.n_minus) == want and got.order == n

    @pytest.mark.parametrize("n,sigma,want", [(5, 1, 4), (4, 0, 2), (6, 0, 6)])
    def test_rank_examples(self, n, sigma, want):
        assert cycle_rank_formula(n, sigma) == want

    def test_formula_tables_agree(self):
        for n in range(3, 51):
            for sigma in range(n + 1):
                assert cycle_rank_formula(n, sigma) == cycle_inertia_formula(n, sigma).rank


class TestUnicyclic:
    def test_c4_with_pendant(self):
        cls = classify_unicyclic(C4_PENDANT)
        assert cls.case == UnicyclicCase.BALANCED and (cls.predicted.p_plus, cls.predicted.n_minus) == (2, 2)
        # frozen from the congruence oracle
        assert graph_inertia(C4_PENDANT, "congruence") == Inertia(2, 2, 1)

    def test_c4(self):
        cls = classify_unicyclic(cycle_graph(4))
        assert cls.case == UnicyclicCase.MINUS_ONE_BOTH and cls.predicted == Inertia(1, 1, 2)

    def test_sigma2_triangle(self, triangle_sigma2):
        cls = classify_unicyclic(triangle_sigma2)
        assert cls.case == UnicyclicCase.PLUS_ONE_POSITIVE and cls.predicted == Inertia(2, 1, 0)

    def test_requires_unicyclic(self):
        with pytest.raises(StructureError):
            classify_unicyclic(path_graph(4))


class TestSigns:
    def test_c4(self):
        p = predict_coefficient_signs(cycle_graph(4))
        assert p.k == 1 and p.even_signs == (1, -1, 0) and p.odd_all_zero

    def test_c3_undirected(self):
        p = predict_coefficient_signs(cycle_graph(3))
        assert p.odd_leading_sign == -1 and p.odd_leading_index == 3

    def test_sigma2_triangle(self, triangle_sigma2):
        p = predict_coefficient_signs(triangle_sigma2)
        assert p.odd_leading_sign == 1 and not p.mismatches(graph_charpoly(triangle_sigma2))

    def test_literal_table_boundary_on_bare_even_cycle(self):
        # the literal even-coefficient table allows i up to q/2 here, yet a_4(C_4) = 0
        assert literal_even_signs(cycle_graph(4)) == (1, -1, 1)
        assert predict_coefficient_signs(cycle_graph(4)).even_signs == (1, -1, 0)


class TestCactus:
    def test_triangle_with_tail(self):
        d = cactus_decomposition(TRIANGLE_TAIL)
        assert matching_number(d.t_g) == 1 and d.t_g.n == 3 and d.t_g.m_edges == 2
        assert matching_number(d.bracket_t_g) == 1 and d.bracket_t_g.n == 2
        assert d.f_edges == ((1, 3),)

    def test_bare_cycle_rejected(self):
        with pytest.raises(StructureError):
            cactus_decomposition(cycle_graph(3))

    def test_intersecting_cycles_rejected(self):
        bowtie = MixedGraph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        assert not in_class_g(bowtie)
        with pytest.raises(StructureError):
            cactus_decomposition(bowtie)

    def test_joined_triangles(self):
        g = joined_sigma2_triangles()
        d = cactus_decomposition(g)
        assert d.t_g.n == 2 and d.t_g.m_edges == 1 and d.bracket_t_g.n == 0
        # the joining edge leaves each cycle for a vertex outside that cycle
        assert d.f_edges == ((2, 3),)

    def test_joining_edge_must_be_an_attachment_edge(self):
        g = joined_sigma2_triangles()
        m, c = matching_number(g), cycle_space_dim(g)
        assert graph_inertia(g) == Inertia(4, 2, 0) and (m, c) == (3, 2)
        # p+ = 4 < m + c = 5, so the matching condition has to fail ...
        assert max_matching_avoiding(g, cycle_attachment_edges(g, [(0, 1, 2), (3, 4, 5)])) < m
        assert not characterize_p_plus_max(g)
        # ... which it would not if the joining edge were left out
        assert max_matching_avoiding(g, []) == m


class TestBounds:
    def test_tree(self):
        t = MixedGraph.build(6, [(0, 1), (1, 2), (1, 3)], [(3, 4), (5, 4)])
        m = matching_number(t)
        assert inertia_bounds(t) == (m, m)

    def test_c4_lower(self):
        assert inertia_bounds(cycle_graph(4)) == (1, 3) and graph_inertia(cycle_graph(4)).p_plus == 1

    def test_sigma2_triangle_upper(self, triangle_sigma2):
        assert inertia_bounds(triangle_sigma2) == (0, 2) and graph_inertia(triangle_sigma2).p_plus == 2


class TestCharacterizations:
    def test_p_plus_max(self, triangle_sigma2):
        assert characterize_p_plus_max(triangle_sigma2)
        assert not characterize_p_plus_max(cycle_graph(3))
        assert characterize_p_plus_max(MixedGraph.build(3, [(0, 1)], [(2, 1)]))  # mixed tree

    def test_n_minus_max(self, triangle_sigma2):
        assert characterize_n_minus_max(cycle_graph(3))
        assert not characterize_n_minus_max(triangle_sigma2)
        assert characterize_n_minus_max(MixedGraph.build(4, [(0, 1)], [(1, 2), (3, 1)]))

    def test_min(self):
        assert characterize_inertia_min(cycle_graph(4))
        assert characterize_inertia_min(DIRECTED_C4)
        assert graph_inertia(DIRECTED_C4) == Inertia(1, 1, 2)
        assert not characterize_inertia_min(cycle_graph(6))

    def test_c4_with_pendant_is_not_minimal(self):
        # every maximum matching of C_4 + pendant may avoid the pendant edge,
        # but the contracted tree has a larger matching than the forest
        assert graph_inertia(C4_PENDANT).p_plus == 2 != 2 - 1
        assert not contracted_tree_condition(C4_PENDANT)
        assert not characterize_inertia_min(C4_PENDANT)

    def test_disconnected_rejected(self):
        with pytest.raises(StructureError):
            characterize_p_plus_max(MixedGraph(2))


class TestExtremal:
    def test_max_case(self, triangle_sigma2):
        report = check_extremal_consequences(triangle_sigma2, "max")
        assert report.passed and {x.vertex for x in report.items} == {0, 1, 2}
        assert {x.item for x in report.items} == {"i", "ii", "iii", "iv", "v", "vi", "vii"}

    def test_min_case(self):
        assert check_extremal_consequences(cycle_graph(4), "min").passed

    def test_not_attaining(self):
        with pytest.raises(StructureError):
            check_extremal_consequences(cycle_graph(4), "max")

    def test_min_case_item_ii_uses_lower_bound(self):
        # two 4-cycles linked through a path of length two, plus a pendant
        g = MixedGraph.build(10, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
                                  (8, 0), (8, 4), (8, 9)])
        assert graph_inertia(g) == Inertia(3, 3, 4) and characterize_inertia_min(g)
        report = check_extremal_consequences(g, "min")
        assert report.passed
        h = delete_vertices(g, [0])
        assert graph_inertia(h).p_plus == matching_number(h) - cycle_space_dim(h)
        assert report.literal_notes  # the m + c form fails on this graph

    def test_summary(self):
        s = classification_summary(C4_PENDANT)
        assert s["inertia"] == [2, 2, 1] and s["unicyclic"]["case"] == "Balanced"
        assert s["characterizations"]["inertia_min"] is False


@settings(max_examples=150)
@given(mixed_graphs(max_n=9))
def test_bounds_hold(g):
    lo, hi = inertia_bounds(g)
    x = graph_inertia(g)
    assert lo <= x.p_plus <= hi and lo <= x.n_minus <= hi


@settings(max_examples=150)
@given(mixed_graphs(min_n=3, max_n=10, chords=st.integers(0, 3)))
def test_characterizations_match_attainment(g):
    x = graph_inertia(g)
    m, c = matching_number(g), cycle_space_dim(g)
    assert characterize_p_plus_max(g) == (x.p_plus == m + c)
    assert characterize_n_minus_max(g) == (x.n_minus == m + c)
    assert characterize_inertia_min(g) == (x.p_plus == m - c) == (x.n_minus == m - c)


@settings(max_examples=150)
@given(mixed_graphs(min_n=3, max_n=10, chords=1))
def test_unicyclic_prediction(g):
    assert classify_unicyclic(g).predicted == graph_inertia(g)
    assert not predict_coefficient_signs(g).mismatches(graph_charpoly(g))
