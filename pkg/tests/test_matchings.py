from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_matchings, graph, ryser_count
from resograph.corpus import builtin
from resograph.errors import CountLimitExceeded
from resograph.matchings import (
    IMPROPER,
    NOT_ALTERNATING,
    PROPER,
    classify_cycle,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    extremal_matching,
    extremes,
    face_flip_class,
    is_face_resonant,
    is_perfect_matching,
    is_weakly_augmenting,
    phi,
    phi_vector,
    psi,
    symmetric_difference_cycles,
)
from resograph.planar import OddPath

COUNTS = {"C4": 2, "C6": 2, "L2": 3, "L3": 4, "phenanthrene": 5, "pyrene": 6,
          "grid2x3": 11, "Q3": 9, "coronene": 20}


def test_counts_against_permanent(corpus):
    for name, g in corpus.items():
        assert len(enumerate_perfect_matchings(g)) == ryser_count(g) == COUNTS[name]


def test_enumeration_against_brute_force(corpus):
    for name, g in corpus.items():
        if len(g.edges) > 20:
            continue
        ms = enumerate_perfect_matchings(g)
        assert list(ms) == brute_matchings(g), name
        assert all(is_perfect_matching(g, m) for m in ms)


def _abstract_brute(n, edges):
    total = 0
    for es in combinations(range(len(edges)), n // 2):
        if len({v for k in es for v in edges[k]}) == n:
            total += 1
    return total


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_random_edge_subsets_count(data):
    g = builtin("grid2x3")
    keep = data.draw(st.lists(st.sampled_from(range(len(g.edges))), unique=True))
    edges = [g.edges[k] for k in sorted(keep)]
    assert count_perfect_matchings(g.n, edges) == _abstract_brute(g.n, edges)


def test_cap_is_enforced(corpus):
    g = corpus["coronene"]
    with pytest.raises(CountLimitExceeded):
        enumerate_perfect_matchings(g, cap=5)
    assert count_perfect_matchings(g.n, g.edges, limit=3) == 3


def test_c6_flip_classes(C6):
    f = C6.finite_faces[0]
    a, b = enumerate_perfect_matchings(C6)
    classes = {face_flip_class(C6, a, f), face_flip_class(C6, b, f)}
    assert classes == {PROPER, IMPROPER}
    assert classify_cycle(C6, a, f.vertices) == face_flip_class(C6, a, f)
    assert classify_cycle(C6, a, tuple(reversed(f.vertices))) == face_flip_class(C6, a, f)


def test_l2_middle_matching_not_alternating_on_outer_cycle(L2):
    outer = L2.infinite_face.vertices
    kinds = [classify_cycle(L2, m, outer) for m in enumerate_perfect_matchings(L2)]
    assert kinds.count(NOT_ALTERNATING) == 1
    assert sorted(k for k in kinds if k != NOT_ALTERNATING) == [IMPROPER, PROPER]


def test_symmetric_difference_cycles(corpus):
    for g in corpus.values():
        ms = enumerate_perfect_matchings(g)
        for m1 in ms[:4]:
            for m2 in ms:
                cycles = symmetric_difference_cycles(g, m1, m2)
                union = 0
                for c in cycles:
                    assert c.cls in (PROPER, IMPROPER)
                    assert union & c.edge_mask == 0
                    union |= c.edge_mask
                assert union == m1 ^ m2
                assert [c.cls for c in symmetric_difference_cycles(g, m2, m1)] == \
                    [IMPROPER if c.cls == PROPER else PROPER for c in cycles]


def test_resonance_of_faces(corpus):
    for g in corpus.values():
        for f in g.finite_faces:
            # every face of an elementary graph is resonant for some matching
            assert any(is_face_resonant(g, m, f) for m in enumerate_perfect_matchings(g))


def test_weakly_augmenting():
    g = graph({"a": (0, 0), "b": (1, 0), "c": (2, 0), "d": (3, 0)},
              [("a", "b"), ("b", "c"), ("c", "d")])
    (m,) = enumerate_perfect_matchings(g)
    assert is_weakly_augmenting(g, m, OddPath((1, 2)))
    assert not is_weakly_augmenting(g, m, OddPath((0, 1)))
    assert not is_weakly_augmenting(g, m, OddPath((0, 1, 2, 3)))
    m2 = 1 << g.edge_index[(1, 2)]
    assert is_weakly_augmenting(g, m2, OddPath((0, 1, 2, 3)))


def test_extremes_are_unique_sink_and_source(corpus):
    for g in corpus.values():
        m0, m1 = extremes(g)
        for f in g.finite_faces:
            assert face_flip_class(g, m0, f) != PROPER
            assert face_flip_class(g, m1, f) != IMPROPER
        for c in g.simple_cycles:
            assert classify_cycle(g, m0, c) != PROPER
            assert classify_cycle(g, m1, c) != IMPROPER


def test_extremes_independent_of_start_and_choice(corpus):
    for g in corpus.values():
        m0, m1 = extremes(g)
        for m in enumerate_perfect_matchings(g):
            for choose in (lambda c: c[0], lambda c: c[-1]):
                assert extremal_matching(g, "min", m, choose) == m0
                assert extremal_matching(g, "max", m, choose) == m1


def test_extremal_rejects_bad_side(C6):
    with pytest.raises(ValueError):
        extremal_matching(C6, "middle")


def _winding(point, poly):
    x, y = point
    wn = 0
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        cross = (x2 - x1) * (y - y1) - (x - x1) * (y2 - y1)
        if y1 <= y < y2 and cross > 0:
            wn += 1
        elif y2 <= y < y1 and cross < 0:
            wn -= 1
    return wn


def _phi_oracle(g, m, f, m0):
    # corpus faces are convex, so the vertex average is an interior point
    pts = g.polygon(f.vertices)
    c = (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))
    return sum(1 for cyc in symmetric_difference_cycles(g, m, m0)
               if _winding(c, g.polygon(cyc.vertices)) != 0)


def test_phi_against_winding_oracle(corpus):
    for g in corpus.values():
        m0, _ = extremes(g)
        for m in enumerate_perfect_matchings(g):
            vec = phi_vector(g, m, m0)
            for k, f in enumerate(g.finite_faces):
                assert vec[k] == phi(g, m, f) == _phi_oracle(g, m, f, m0)


def test_phi_of_max_on_l2(L2):
    m0, m1 = extremes(L2)
    assert phi_vector(L2, m1) == (1, 1)
    assert phi_vector(L2, m0) == (0, 0)


def test_psi_antisymmetric_and_matches_phi(corpus):
    for g in corpus.values():
        m0, _ = extremes(g)
        ms = enumerate_perfect_matchings(g)
        for m in ms:
            for f in g.finite_faces:
                assert psi(g, m, m0, f) == phi(g, m, f)
        for m1 in ms[:3]:
            for m2 in ms[-3:]:
                for f in g.finite_faces:
                    assert psi(g, m1, m2, f) == -psi(g, m2, m1, f)
