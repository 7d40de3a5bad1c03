from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from resograph.errors import PreconditionViolated
from resograph.lattice import structure
from resograph.median import (
    Metric,
    connected_subsets,
    convex_expansion,
    graphs_isomorphic,
    inner_dual,
    is_convex_subset,
    is_isometric_subset,
    is_median_graph,
    is_peripheral_expansion_step,
    median_witness,
    theta_classes,
    theta_induced_graph,
    theta_is_transitive,
    theta_related,
)

THETA_MATCHES_DUAL = {"C4": True, "C6": True, "L2": True, "L3": True, "phenanthrene": True,
                      "pyrene": False, "grid2x3": False, "Q3": False, "coronene": False}


def _median_oracle(h):
    d = dict(nx.all_pairs_shortest_path_length(h))

    def interval(a, b):
        return {z for z in h if d[a][z] + d[z][b] == d[a][b]}

    return all(len(interval(a, b) & interval(b, c) & interval(a, c)) == 1
               for a, b, c in combinations(h.nodes(), 3))


def test_theta_small_graphs():
    assert len(theta_classes(nx.cycle_graph(4))) == 2
    assert len(theta_classes(nx.path_graph(3))) == 2
    assert theta_classes(nx.complete_graph(2)) == [[(0, 1)]]
    c4 = nx.cycle_graph(4)
    assert theta_related(c4, (0, 1), (3, 2))
    assert not theta_related(c4, (0, 1), (1, 2))


def test_theta_of_hypercube():
    q = nx.convert_node_labels_to_integers(nx.hypercube_graph(4))
    classes = theta_classes(q)
    assert sorted(len(c) for c in classes) == [8] * 4
    assert theta_is_transitive(q)
    assert is_median_graph(q)


def test_theta_not_transitive_on_c5():
    assert not theta_is_transitive(nx.cycle_graph(5))


def test_median_examples():
    for tree in (nx.balanced_tree(2, 3), nx.path_graph(6), nx.star_graph(4)):
        assert is_median_graph(tree)
    assert is_median_graph(nx.grid_2d_graph(3, 4))
    assert not is_median_graph(nx.cycle_graph(6))
    assert median_witness(nx.cycle_graph(6)) is not None
    assert not is_median_graph(nx.complete_bipartite_graph(2, 3))
    assert not is_median_graph(nx.Graph())


def test_metric_rejects_disconnected():
    with pytest.raises(PreconditionViolated):
        Metric(nx.empty_graph(2))


def test_convex_and_isometric_in_c6():
    c6 = nx.cycle_graph(6)
    assert is_convex_subset(c6, [0, 1, 2])
    assert not is_convex_subset(c6, [0, 1, 2, 3])
    assert is_isometric_subset(c6, [0, 1, 2, 3])
    assert not is_isometric_subset(c6, [0, 1, 2, 3, 4])
    assert not is_isometric_subset(c6, [0, 2])


def test_convex_expansion_small():
    k1 = nx.empty_graph(1)
    assert graphs_isomorphic(convex_expansion(k1, {0}, {0}), nx.complete_graph(2))
    k2 = nx.complete_graph(2)
    assert graphs_isomorphic(convex_expansion(k2, {0, 1}, {1}), nx.path_graph(3))
    assert graphs_isomorphic(convex_expansion(k2, {0, 1}, {0, 1}), nx.cycle_graph(4))


def test_convex_expansion_preconditions():
    p3 = nx.path_graph(3)
    with pytest.raises(PreconditionViolated):
        convex_expansion(p3, {0, 1}, {1})  # does not cover
    with pytest.raises(PreconditionViolated):
        convex_expansion(p3, {0}, {1, 2})  # disjoint
    with pytest.raises(PreconditionViolated):
        convex_expansion(nx.cycle_graph(4), {0, 1, 2, 3}, {0, 2})  # not convex


def test_connected_subsets_against_brute_force():
    h = nx.grid_2d_graph(2, 3)
    for k in range(1, 5):
        brute = {frozenset(s) for s in combinations(h.nodes(), k)
                 if nx.is_connected(h.subgraph(s))}
        assert connected_subsets(h, k) == brute


def test_peripheral_witness():
    w = is_peripheral_expansion_step(nx.path_graph(3), nx.complete_graph(2))
    assert w is not None and len(w) == 1
    assert is_peripheral_expansion_step(nx.cycle_graph(4), nx.complete_graph(2)) == {0, 1}
    assert is_peripheral_expansion_step(nx.cycle_graph(6), nx.path_graph(3)) is None


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=10 ** 6), min_size=1, max_size=6))
def test_peripheral_expansions_stay_median(choices):
    h = nx.empty_graph(1)
    for steps, r in enumerate(choices, start=1):
        m = Metric(h)
        convex = sorted((s for k in (1, 2, 3) for s in connected_subsets(h, k)
                         if is_convex_subset(h, s, m)), key=lambda s: sorted(s))
        w2 = convex[r % len(convex)]
        h = nx.convert_node_labels_to_integers(convex_expansion(h, set(h.nodes()), w2))
        assert is_median_graph(h) == _median_oracle(h) is True
        assert len(theta_classes(h)) == steps
        assert theta_is_transitive(h)


def test_resonance_graphs_are_median(corpus):
    for name, g in corpus.items():
        zx = structure(g).z.to_networkx()
        assert is_median_graph(zx) and _median_oracle(zx), name
        assert theta_is_transitive(zx)


def test_theta_induced_graph_of_c4():
    t = theta_induced_graph(nx.cycle_graph(4))
    assert t.number_of_nodes() == 2 and t.number_of_edges() == 0


def test_theta_induced_graph_of_path():
    t = theta_induced_graph(nx.path_graph(3))
    assert list(t.edges()) == [(0, 1)]
    assert t.edges[0, 1]["witness"][0][0] == 1


def test_inner_dual_of_q3_is_wheel(Q3):
    assert graphs_isomorphic(inner_dual(Q3), nx.wheel_graph(5))


def test_theta_against_inner_dual(corpus):
    for name, g in corpus.items():
        t = theta_induced_graph(structure(g).z.to_networkx())
        d = inner_dual(g)
        assert graphs_isomorphic(t, d) == THETA_MATCHES_DUAL[name], name
        assert graphs_isomorphic(t, d) == nx.is_isomorphic(t, d)


def test_isomorphism_against_networkx():
    pairs = [(nx.cycle_graph(6), nx.disjoint_union(nx.cycle_graph(3), nx.cycle_graph(3))),
             (nx.path_graph(4), nx.star_graph(3)),
             (nx.petersen_graph(), nx.petersen_graph()),
             (nx.cycle_graph(5), nx.relabel_nodes(nx.cycle_graph(5), {i: -i for i in range(5)}))]
    for a, b in pairs:
        assert graphs_isomorphic(a, b) == nx.is_isomorphic(a, b)
