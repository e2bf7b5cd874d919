import json

import networkx as nx
import pytest
from hypothesis import given

from mgx.graph import (
    Edge,
    GraphError,
    MixedGraph,
    Orientation,
    all_cycles_if_disjoint,
    blocks,
    complete_graph,
    components,
    cycle_graph,
    cycle_space_dim,
    cycle_traversal,
    delete_vertices,
    disjoint_union,
    from_json_dict,
    induced_subgraph,
    is_connected,
    iter_mg,
    load_graph,
    make_edge,
    parse_mg,
    path_graph,
    pendant_and_quasi_pendant,
    quasi_pendant_vertices,
    star_graph,
    to_json_dict,
    to_mg,
)

from conftest import mixed_graphs

TRIANGLE_PENDANT = MixedGraph.build(4, [(0, 1), (1, 2), (2, 0), (2, 3)])


def iso(a: MixedGraph, b: MixedGraph) -> bool:
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


class TestEdgesAndConstruction:
    def test_arc_direction_both_ways(self):
        g = MixedGraph.build(3, [], [(2, 0)])
        assert g.direction(2, 0) == 1 and g.direction(0, 2) == -1
        e = g.edges[0]
        assert e.is_arc and (e.tail, e.head) == (2, 0)

    def test_undirected_has_no_tail(self):
        e = make_edge(1, 0)
        assert e.pair == (0, 1) and e.tail is None and not e.is_arc

    def test_direction_of_non_edge_raises(self):
        with pytest.raises(GraphError):
            path_graph(3).direction(0, 2)

    @pytest.mark.parametrize("bad", [
        lambda: MixedGraph.build(2, [(0, 0)]),
        lambda: MixedGraph.build(2, [(0, 1), (1, 0)]),
        lambda: MixedGraph.build(2, [(0, 1)], [(1, 0)]),
        lambda: MixedGraph.build(2, [(0, 2)]),
        lambda: MixedGraph.build(-1),
    ])
    def test_rejects_loops_multi_edges_and_bad_ids(self, bad):
        with pytest.raises(GraphError):
            bad()

    def test_reversed_flips_every_arc(self, triangle_sigma2):
        r = triangle_sigma2.reversed()
        assert r.direction(1, 0) == 1 and r.direction(2, 1) == 1 and r.direction(0, 2) == 0

    def test_families(self):
        assert path_graph(4).pairs == ((0, 1), (1, 2), (2, 3))
        assert cycle_graph(5).m_edges == 5
        assert star_graph(5).degree(0) == 4
        assert complete_graph(4).m_edges == 6


class TestComponents:
    def test_two_disjoint_edges(self):
        parts = components(MixedGraph.build(4, [(0, 1), (2, 3)]))
        assert [p.n for p in parts] == [2, 2]

    def test_connected_cycle(self):
        assert len(components(cycle_graph(5))) == 1 and is_connected(cycle_graph(5))

    def test_empty_graph_singletons(self):
        assert [p.n for p in components(MixedGraph(3))] == [1, 1, 1]

    def test_component_keeps_arcs(self):
        g = disjoint_union(path_graph(2), MixedGraph.build(2, [], [(1, 0)]))
        assert components(g)[1].direction(1, 0) == 1


class TestCycleSpaceDim:
    def test_tree(self):
        tree = MixedGraph.build(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)])
        assert cycle_space_dim(tree) == 0

    def test_c4(self):
        assert cycle_space_dim(cycle_graph(4)) == 1

    def test_two_triangles(self):
        assert cycle_space_dim(disjoint_union(cycle_graph(3), cycle_graph(3))) == 2


class TestPendants:
    def test_p3(self):
        assert pendant_and_quasi_pendant(path_graph(3)) == [(0, 1), (2, 1)]

    def test_c4_has_none(self):
        assert pendant_and_quasi_pendant(cycle_graph(4)) == []

    def test_single_edge_reported_once(self):
        assert pendant_and_quasi_pendant(path_graph(2)) == [(0, 1)]

    def test_quasi_pendant_set(self):
        assert quasi_pendant_vertices(star_graph(4)) == {0}


class TestDeletion:
    def test_c4_minus_vertex_is_p3(self):
        assert iso(delete_vertices(cycle_graph(4), [1]), path_graph(3))

    def test_delete_nothing(self):
        assert delete_vertices(TRIANGLE_PENDANT, []) == TRIANGLE_PENDANT

    def test_delete_pendant_pair_leaves_edge(self):
        h = delete_vertices(TRIANGLE_PENDANT, [3, 2])
        assert h.n == 2 and h.pairs == ((0, 1),)

    def test_unknown_vertex(self):
        with pytest.raises(GraphError):
            delete_vertices(path_graph(2), [5])

    def test_origin_composes(self):
        h = delete_vertices(delete_vertices(path_graph(5), [0]), [1])
        assert h.origin == (1, 3, 4)

    def test_induced_keeps_orientation(self, triangle_sigma2):
        h = induced_subgraph(triangle_sigma2, [1, 2])
        assert h.direction(0, 1) == 1


class TestBlocks:
    def test_triangle_with_pendant(self):
        b = blocks(TRIANGLE_PENDANT)
        assert set(b.blocks) == {frozenset({0, 1, 2}), frozenset({2, 3})}
        assert b.cut_vertices == {2}

    def test_p4(self):
        assert len(blocks(path_graph(4)).blocks) == 3

    def test_c5(self):
        assert blocks(cycle_graph(5)).blocks == (frozenset(range(5)),)


class TestDisjointCycles:
    def test_triangles_joined_by_path(self):
        g = MixedGraph.build(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])
        assert all_cycles_if_disjoint(g) == [(0, 1, 2), (4, 5, 6)]

    def test_shared_vertex(self):
        bowtie = MixedGraph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        assert all_cycles_if_disjoint(bowtie) is None

    def test_k4(self):
        assert all_cycles_if_disjoint(complete_graph(4)) is None

    def test_tree_has_empty_list(self):
        assert all_cycles_if_disjoint(path_graph(4)) == []

    def test_traversal_follows_edges(self):
        g = MixedGraph.build(5, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 0)])
        assert cycle_traversal(g, range(5)) == (0, 2, 4, 1, 3)


class TestFormats:
    TEXT = "# triangle with one arc\nn 3\ne 0 1\ne 1 2\na 2 0\n"

    def test_parse(self):
        g = parse_mg(self.TEXT)
        assert g.n == 3 and g.direction(2, 0) == 1 and g.direction(0, 1) == 0

    def test_multiple_graphs(self):
        gs = list(iter_mg(self.TEXT + "n 2\na 1 0\n"))
        assert len(gs) == 2 and gs[1].direction(1, 0) == 1

    @pytest.mark.parametrize("text", ["e 0 1\n", "n 2\nx 0 1\n", "n 2\ne 0\n", "n 2\ne 0 5\n",
                                      "n two\n"])
    def test_malformed_reports_line(self, text):
        with pytest.raises(GraphError, match="line"):
            parse_mg(text)

    def test_parse_requires_one_graph(self):
        with pytest.raises(GraphError):
            parse_mg("")

    def test_json_schema(self):
        d = to_json_dict(MixedGraph.build(2, [], [(1, 0)]))
        assert d == {"n": 2, "edges": [{"u": 1, "v": 0, "kind": "a"}]}

    def test_bad_json(self):
        with pytest.raises(GraphError):
            from_json_dict({"n": 2, "edges": [{"u": 0, "v": 1, "kind": "z"}]})

    def test_load_both_formats(self, tmp_path):
        g = parse_mg(self.TEXT)
        (tmp_path / "g.mg").write_text(to_mg(g))
        (tmp_path / "g.json").write_text(json.dumps(to_json_dict(g)))
        assert load_graph(str(tmp_path / "g.mg")) == g == load_graph(str(tmp_path / "g.json"))

    @given(mixed_graphs(max_n=9))
    def test_round_trips(self, g):
        assert parse_mg(to_mg(g)) == g
        assert from_json_dict(json.loads(json.dumps(to_json_dict(g)))) == g


@given(mixed_graphs(max_n=8))
def test_components_partition_vertices_and_edges(g):
    parts = components(g)
    assert sum(p.n for p in parts) == g.n
    assert sum(p.m_edges for p in parts) == g.m_edges
    assert all(is_connected(p) for p in parts)


@given(mixed_graphs(max_n=8))
def test_cycle_space_dim_nonnegative_and_matches_networkx(g):
    nxg = g.to_networkx()
    assert cycle_space_dim(g) == g.m_edges - g.n + nx.number_connected_components(nxg) >= 0


@given(mixed_graphs(max_n=8))
def test_orientation_flags_round_trip(g):
    flags = [e.orientation for e in g.edges]
    assert g.underlying().with_orientations(flags) == g
    assert all(e.orientation == Orientation.UNDIRECTED for e in g.underlying().edges)


def test_edge_namedtuple_fields():
    assert Edge(0, 1, Orientation.FORWARD).head == 1
