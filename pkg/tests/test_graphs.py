import random
from itertools import combinations

import pytest

import zoo
from toughkit import (
    Graph,
    blocks,
    bridges,
    components,
    edge,
    set_vertex_cap,
    simplicial_vertices,
    vertex_cap,
    vertex_connectivity,
)
from toughkit.enumeration import _labeled_graphs, enumerate_trees


def test_graph_construction_and_accessors():
    g = Graph(4, [(0, 1), (1, 2), (3, 1)])
    assert g.n == 4
    assert g.edges() == [(0, 1), (1, 2), (1, 3)]
    assert g.edge_count == 3
    assert g.degree(1) == 3
    assert g.neighbors(1) == (0, 2, 3)
    assert g.has_edge(3, 1) and not g.has_edge(0, 3)
    assert g.degrees() == (1, 3, 1, 1)


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 5)])
    with pytest.raises(ValueError):
        Graph(vertex_cap() + 1)


def test_duplicate_edges_collapse():
    assert Graph(3, [(0, 1), (1, 0), (0, 1)]).edge_count == 1


def test_vertex_cap_configurable():
    set_vertex_cap(64)
    try:
        g = Graph(40)
        assert g.n == 40
        with pytest.raises(ValueError):
            set_vertex_cap(65)
    finally:
        set_vertex_cap(32)
    with pytest.raises(ValueError):
        Graph(40)


def test_edge_helper():
    assert edge(3, 1) == (1, 3)
    with pytest.raises(ValueError):
        edge(2, 2)


def test_delete_edge_and_add_edges():
    c4 = zoo.cycle(4)
    p4 = c4.delete_edge(0, 3)
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert p4.add_edges([(0, 3)]) == c4
    with pytest.raises(ValueError):
        c4.delete_edge(0, 2)


def test_components_on_named_graphs():
    c4 = zoo.cycle(4)
    assert components(c4).count == 1
    info = components(c4, [0, 2])
    assert info.count == 2
    assert info.labels == {1: 0, 3: 1}
    assert info.sizes == [1, 1]
    # removing the star center isolates the leaves
    assert components(zoo.star(3), [0]).count == 3


def test_components_id_assignment_and_sizes():
    g = Graph(6, [(0, 1), (2, 3), (2, 4)])
    info = components(g, [5])
    assert info.count == 2
    assert info.labels[0] == 0 and info.labels[2] == 1
    assert sum(info.sizes) == g.n - 1
    with pytest.raises(ValueError):
        components(g, [7])


def test_bridges_examples():
    assert bridges(zoo.path(4)) == frozenset({(0, 1), (1, 2), (2, 3)})
    assert bridges(zoo.cycle(4)) == frozenset()
    assert bridges(zoo.paw()) == frozenset({(0, 3)})


def test_bridges_definition_exhaustive_n5():
    # e is a bridge iff deleting it increases the component count
    for g in _labeled_graphs(5, connected_only=False):
        br = bridges(g)
        base = components(g).count
        for e in g.edges():
            expected = components(g.delete_edge(*e)).count > base
            assert (e in br) == expected


def test_blocks_examples():
    blks, cuts = blocks(zoo.bowtie())
    assert blks == [frozenset({0, 1, 4}), frozenset({2, 3, 4})]
    assert cuts == frozenset({4})
    blks, cuts = blocks(zoo.cycle(4))
    assert blks == [frozenset({0, 1, 2, 3})]
    assert cuts == frozenset()
    blks, cuts = blocks(zoo.path(3))
    assert blks == [frozenset({0, 1}), frozenset({1, 2})]
    assert cuts == frozenset({1})


def test_blocks_rejects_disconnected():
    with pytest.raises(ValueError):
        blocks(Graph(4, [(0, 1), (2, 3)]))


def test_every_tree_is_all_bridges_and_edge_blocks():
    for n in range(2, 8):
        for t in enumerate_trees(n):
            assert len(bridges(t)) == n - 1
            blks, _ = blocks(t)
            assert all(len(b) == 2 for b in blks)
            assert len(blks) == n - 1


def test_blocks_partition_edges_exhaustive_n5():
    for g in _labeled_graphs(5, connected_only=True):
        blks, _ = blocks(g)
        seen = set()
        for b in blks:
            for u, v in combinations(sorted(b), 2):
                if g.has_edge(u, v):
                    assert (u, v) not in seen
                    seen.add((u, v))
        assert seen == set(g.edges())


def test_vertex_connectivity_examples():
    assert vertex_connectivity(zoo.cycle(5)) == (2, False)
    assert vertex_connectivity(zoo.complete(4)) == (3, True)
    assert vertex_connectivity(zoo.path(4)) == (1, False)
    assert vertex_connectivity(Graph(1)) == (0, True)
    assert vertex_connectivity(Graph(3, [(0, 1)])) == (0, False)
    assert vertex_connectivity(zoo.petersen()) == (3, False)


def _brute_force_kappa(g):
    # smallest vertex set whose removal disconnects (or empties) the graph
    for size in range(g.n - 1):
        for combo in combinations(range(g.n), size):
            if components(g, combo).count >= 2:
                return size
    return g.n - 1


def test_vertex_connectivity_brute_force_exhaustive_n5():
    for g in _labeled_graphs(5, connected_only=True):
        expected = _brute_force_kappa(g)
        got = vertex_connectivity(g)
        assert got.value == expected
        assert got.complete == g.is_complete()


def test_vertex_connectivity_random_vs_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(20240817)
    for _ in range(150):
        n = rng.randint(4, 9)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.45]
        g = Graph(n, edges)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        if g.is_complete():
            continue
        assert vertex_connectivity(g).value == nx.node_connectivity(G)


def test_kappa_at_most_min_degree():
    for g in _labeled_graphs(5, connected_only=True):
        if not g.is_complete():
            assert vertex_connectivity(g).value <= g.min_degree()


def test_simplicial_vertices_examples():
    assert simplicial_vertices(zoo.star(3)) == frozenset({1, 2, 3})
    assert simplicial_vertices(zoo.cycle(4)) == frozenset()
    assert simplicial_vertices(zoo.paw()) == frozenset({1, 2, 3})


def test_simplicial_direct_definition_exhaustive_n5():
    for g in _labeled_graphs(5, connected_only=False):
        expected = set()
        for v in range(g.n):
            nb = g.neighbors(v)
            if all(g.has_edge(a, b) for a, b in combinations(nb, 2)):
                expected.add(v)
        assert simplicial_vertices(g) == expected
