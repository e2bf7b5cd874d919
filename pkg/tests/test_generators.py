import itertools
import random

import networkx as nx
import pytest

from mgx import generators as gen
from mgx.elementary import signature
from mgx.graph import GraphError, MixedGraph, all_cycles_if_disjoint, cycle_graph, is_connected, path_graph


def connected_unicyclic_by_subsets(n: int) -> set[tuple]:
    """Oracle: scan every n-edge subset of K_n for connected ones."""
    pairs = list(itertools.combinations(range(n), 2))
    out = set()
    for chosen in itertools.combinations(pairs, n):
        g = MixedGraph.build(n, chosen)
        if is_connected(g):
            out.add(g.pairs)
    return out


class TestOrientations:
    def test_single_edge(self):
        assert len(list(gen.enumerate_orientations(path_graph(2)))) == 3

    def test_p3(self):
        assert len(set(gen.enumerate_orientations(path_graph(3)))) == 9

    def test_c3_even_signature_count(self):
        graphs = list(gen.enumerate_orientations(cycle_graph(3)))
        even = [g for g in graphs if signature(g, (0, 1, 2)).sigma % 2 == 0]
        # sigma is even exactly when the number of arcs is even: 1 + 3 * 2^2
        assert len(graphs) == 27 and len(even) == 1 + 3 * 4 == 13

    def test_order_is_deterministic(self):
        a = [g.edges for g in gen.enumerate_orientations(cycle_graph(4))]
        assert a == [g.edges for g in gen.enumerate_orientations(cycle_graph(4))]
        assert a[0] == cycle_graph(4).edges

    def test_cap(self):
        big = MixedGraph.build(22, [(i, i + 1) for i in range(21)])
        with pytest.raises(GraphError):
            next(gen.enumerate_orientations(big))


class TestFamilies:
    def test_path(self):
        assert list(gen.generate(gen.GeneratorSpec("path", 4))) == [path_graph(4)]

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_unicyclic_all_against_subset_scan(self, n):
        got = [g.pairs for g in gen.unicyclic_all(n)]
        assert len(got) == len(set(got))
        assert set(got) == connected_unicyclic_by_subsets(n)

    def test_unicyclic_all_n4_shapes(self):
        shapes = {tuple(sorted(d for _, d in g.to_networkx().degree())) for g in gen.unicyclic_all(4)}
        assert shapes == {(2, 2, 2, 2), (1, 2, 2, 3)}

    def test_random_tree_seeded(self):
        spec = gen.GeneratorSpec("random_tree", 10, seed=7)
        first = list(gen.generate(spec))
        assert first == list(gen.generate(spec)) and first[0].m_edges == 9
        assert nx.is_tree(first[0].to_networkx())

    def test_random_connected(self):
        gs = list(gen.generate(gen.GeneratorSpec("random_connected", 8, extra=3, count=5, seed=1)))
        assert all(is_connected(g) and g.m_edges == 10 for g in gs)

    @pytest.mark.parametrize("spec", [gen.GeneratorSpec("blob", 3), gen.GeneratorSpec("path", -1),
                                      gen.GeneratorSpec("star", 0)])
    def test_invalid(self, spec):
        with pytest.raises(ValueError):
            list(gen.generate(spec))

    def test_random_cactus_has_disjoint_cycles(self):
        rng = random.Random(3)
        for _ in range(200):
            g = gen.random_cactus(rng.randint(1, 12), rng)
            assert is_connected(g) and all_cycles_if_disjoint(g) is not None

    def test_random_disconnected(self):
        rng = random.Random(5)
        assert not any(is_connected(gen.random_disconnected(rng)) for _ in range(50))


def _atlas_disjoint_cycle_classes(n: int) -> int:
    count = 0
    for a in nx.graph_atlas_g():
        if a.number_of_nodes() == n and nx.is_connected(a):
            g = MixedGraph.build(n, list(a.edges()))
            count += all_cycles_if_disjoint(g) is not None
    return count


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_census_matches_graph_atlas(n):
    census = gen.disjoint_cycle_census(n)
    assert len(census) == _atlas_disjoint_cycle_classes(n)
    assert all(is_connected(g) and all_cycles_if_disjoint(g) is not None for g in census)


def test_unicyclic_census_counts():
    # unlabelled connected unicyclic graphs
    assert [len(gen.unicyclic_census(n)) for n in range(3, 9)] == [1, 2, 5, 13, 33, 89]
