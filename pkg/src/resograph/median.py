"""Median-graph machinery on plain undirected graphs (``networkx.Graph``).

Distances come from BFS; intervals are kept as Python int bitsets over a
fixed vertex numbering.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

import networkx as nx

from .errors import PreconditionViolated, SizeLimitExceeded

ISOMORPHISM_LIMIT = 5000


class Metric:
    """All-pairs BFS distances of a connected graph."""

    def __init__(self, h):
        self.nodes = list(h.nodes())
        self.pos = {v: i for i, v in enumerate(self.nodes)}
        n = len(self.nodes)
        adj = [[self.pos[w] for w in h.neighbors(v)] for v in self.nodes]
        self.adj = adj
        self.d = []
        for s in range(n):
            dist = [-1] * n
            dist[s] = 0
            dq = deque([s])
            while dq:
                u = dq.popleft()
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        dq.append(w)
            if -1 in dist:
                raise PreconditionViolated("graph is not connected")
            self.d.append(dist)
        self._interval = {}

    def dist(self, a, b):
        return self.d[self.pos[a]][self.pos[b]]

    def interval(self, i, j):
        """Bitset of vertices on shortest i-j paths (positions, not labels)."""
        key = (i, j) if i <= j else (j, i)
        got = self._interval.get(key)
        if got is None:
            di, dj, t = self.d[i], self.d[j], self.d[i][j]
            got = 0
            for z in range(len(self.nodes)):
                if di[z] + dj[z] == t:
                    got |= 1 << z
            self._interval[key] = got
        return got


def _edges(h):
    return sorted(tuple(sorted(e, key=repr)) for e in h.edges())


def theta_related(h, e1, e2, metric=None):
    """Djokovic-Winkler relation between edges uv and xy."""
    m = metric or Metric(h)
    (u, v), (x, y) = e1, e2
    return m.dist(u, x) + m.dist(v, y) != m.dist(u, y) + m.dist(v, x)


def theta_classes(h, metric=None):
    """Transitive closure of theta as a list of sorted edge lists.

    The closure is taken even though theta is transitive on median graphs,
    so that a non-median input still yields a partition.
    """
    m = metric or Metric(h)
    es = _edges(h)
    parent = list(range(len(es)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in combinations(range(len(es)), 2):
        if theta_related(h, es[a], es[b], m):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
    groups = {}
    for k in range(len(es)):
        groups.setdefault(find(k), []).append(es[k])
    return sorted(groups.values())


def theta_is_transitive(h, metric=None):
    m = metric or Metric(h)
    es = _edges(h)
    rel = {(a, b) for a, b in combinations(range(len(es)), 2)
           if theta_related(h, es[a], es[b], m)}
    for cls in theta_classes(h, m):
        idx = [es.index(e) for e in cls]
        for a, b in combinations(sorted(idx), 2):
            if (a, b) not in rel:
                return False
    return True


def median_witness(h, metric=None):
    """A vertex triple without a unique median, or None."""
    m = metric or Metric(h)
    n = len(m.nodes)
    for a, b, c in combinations(range(n), 3):
        common = m.interval(a, b) & m.interval(b, c) & m.interval(a, c)
        if bin(common).count("1") != 1:
            return tuple(m.nodes[i] for i in (a, b, c))
    return None


def is_median_graph(h, metric=None):
    if h.number_of_nodes() == 0 or not nx.is_connected(h):
        return False
    return median_witness(h, metric) is None


def _positions(m, w):
    return [m.pos[v] for v in w]


def is_convex_subset(h, w, metric=None):
    """Every shortest path between two members of ``w`` stays inside ``w``."""
    m = metric or Metric(h)
    idx = _positions(m, set(w))
    mask = 0
    for i in idx:
        mask |= 1 << i
    for a, b in combinations(idx, 2):
        if m.interval(a, b) & ~mask:
            return False
    return True


def is_isometric_subset(h, w, metric=None):
    """Distances inside the induced subgraph equal those of ``h``."""
    w = set(w)
    sub = h.subgraph(w)
    if not nx.is_connected(sub):
        return False
    m = metric or Metric(h)
    ms = Metric(sub)
    return all(ms.dist(a, b) == m.dist(a, b) for a, b in combinations(w, 2))


def convex_expansion(h, w1, w2):
    """Expand ``h`` along the covers ``w1``, ``w2``.

    Vertices of the result are ``(v, 1)`` for v in w1 and ``(v, 2)`` for v in
    w2; each copy of the intersection is joined to its twin.
    """
    w1, w2 = set(w1), set(w2)
    nodes = set(h.nodes())
    m = Metric(h)
    if w1 | w2 != nodes:
        raise PreconditionViolated("w1 and w2 do not cover the vertex set")
    if not w1 & w2:
        raise PreconditionViolated("w1 and w2 are disjoint")
    if not is_isometric_subset(h, w1, m):
        raise PreconditionViolated("w1 is not isometric")
    if not is_isometric_subset(h, w2, m):
        raise PreconditionViolated("w2 is not isometric")
    common = w1 & w2
    if not nx.is_connected(h.subgraph(common)) or not is_convex_subset(h, common, m):
        raise PreconditionViolated("w1 & w2 is not convex")
    for u, v in h.edges():
        if (u in w1 - w2 and v in w2 - w1) or (v in w1 - w2 and u in w2 - w1):
            raise PreconditionViolated("an edge joins w1 - w2 to w2 - w1")
    out = nx.Graph()
    out.add_nodes_from((v, 1) for v in sorted(w1, key=repr))
    out.add_nodes_from((v, 2) for v in sorted(w2, key=repr))
    for side, w in ((1, w1), (2, w2)):
        for u, v in h.subgraph(w).edges():
            out.add_edge((u, side), (v, side))
    for v in common:
        out.add_edge((v, 1), (v, 2))
    return out


def connected_subsets(h, k):
    """All connected vertex subsets of size ``k`` (as frozensets), grown level by level."""
    if k <= 0:
        return set()
    level = {frozenset([v]) for v in h.nodes()}
    for _ in range(k - 1):
        nxt = set()
        for sub in level:
            for v in sub:
                for w in h.neighbors(v):
                    if w not in sub:
                        nxt.add(sub | {w})
        level = nxt
    return level


def is_peripheral_expansion_step(zbig, zsmall):
    """A convex ``w2`` in ``zsmall`` whose peripheral expansion is ``zbig``, or None."""
    k = zbig.number_of_nodes() - zsmall.number_of_nodes()
    if k <= 0 or k > zsmall.number_of_nodes():
        return None
    m = Metric(zsmall)
    everything = set(zsmall.nodes())
    for w2 in sorted(connected_subsets(zsmall, k), key=lambda s: sorted(map(repr, s))):
        extra_edges = zsmall.subgraph(w2).number_of_edges() + k
        if zbig.number_of_edges() != zsmall.number_of_edges() + extra_edges:
            continue
        if not is_convex_subset(zsmall, w2, m):
            continue
        if graphs_isomorphic(convex_expansion(zsmall, everything, w2), zbig):
            return set(w2)
    return None


def theta_induced_graph(h, metric=None):
    """Graph on theta classes; two classes are adjacent when some pair of
    their edges shares an endpoint without lying on a common 4-cycle.

    Edge attribute ``witness`` records one such pair.
    """
    m = metric or Metric(h)
    classes = theta_classes(h, m)
    cls_of = {}
    for i, cls in enumerate(classes):
        for u, v in cls:
            cls_of[frozenset((u, v))] = i
    out = nx.Graph()
    out.add_nodes_from(range(len(classes)))
    for v in sorted(h.nodes(), key=repr):
        nbrs = sorted(h.neighbors(v), key=repr)
        for a, b in combinations(nbrs, 2):
            ca, cb = cls_of[frozenset((v, a))], cls_of[frozenset((v, b))]
            if ca == cb or out.has_edge(ca, cb):
                continue
            # a 4-cycle through va and vb closes at a common neighbour of a, b
            square = any(w != v for w in set(h.neighbors(a)) & set(h.neighbors(b)))
            if not square:
                out.add_edge(ca, cb, witness=((v, a), (v, b)))
    out.graph["classes"] = classes
    return out


def inner_dual(g):
    """Finite faces of a plane graph, adjacent when they share an edge."""
    out = nx.Graph()
    faces = g.finite_faces
    out.add_nodes_from(f.id for f in faces)
    for a, b in combinations(faces, 2):
        if a.edge_mask & b.edge_mask:
            out.add_edge(a.id, b.id)
    return out


def graphs_isomorphic(a, b, limit=ISOMORPHISM_LIMIT):
    """Exact isomorphism test.

    Cheap invariants first (order, size, degree sequence, sorted distance
    profiles), then VF2 backtracking.
    """
    if a.number_of_nodes() > limit or b.number_of_nodes() > limit:
        raise SizeLimitExceeded(f"isomorphism limited to {limit} vertices")
    if a.number_of_nodes() != b.number_of_nodes() or \
            a.number_of_edges() != b.number_of_edges():
        return False
    if sorted(d for _, d in a.degree()) != sorted(d for _, d in b.degree()):
        return False
    if nx.is_connected(a) if a.number_of_nodes() else True:
        if b.number_of_nodes() and not nx.is_connected(b):
            return False
        if a.number_of_nodes():
            pa = sorted(sorted(r.values()) for _, r in nx.all_pairs_shortest_path_length(a))
            pb = sorted(sorted(r.values()) for _, r in nx.all_pairs_shortest_path_length(b))
            if pa != pb:
                return False
    return nx.is_isomorphic(a, b)
