"""Resonance graph Z(G), its Z-transformation orientation and the matching lattice."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from .errors import (
    FormulaViolated,
    NotALattice,
    NotDistributive,
    OrientationAmbiguous,
)
from .matchings import (
    IMPROPER,
    NOT_ALTERNATING,
    PROPER,
    enumerate_perfect_matchings,
    extremes,
    face_flip_class,
    is_alternating_cycle,
    phi_vector,
)
from .planar import iter_bits
from .report import Check


@dataclass
class ResonanceGraph:
    """Perfect matchings joined by single-face flips.

    ``edges`` holds ``(i, j, face_id)`` with ``i < j`` indexing ``matchings``.
    """
    graph: object
    matchings: tuple
    edges: list
    index: dict = field(repr=False)
    adj: list = field(repr=False)

    def __len__(self):
        return len(self.matchings)

    def to_networkx(self):
        h = nx.Graph()
        h.add_nodes_from(range(len(self.matchings)))
        for i, j, f in self.edges:
            h.add_edge(i, j, face=f)
        return h

    def distances_from(self, src):
        dist = [-1] * len(self.matchings)
        dist[src] = 0
        dq = deque([src])
        while dq:
            u = dq.popleft()
            for w, _ in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    dq.append(w)
        return dist


@dataclass
class ResonanceDigraph:
    """Arcs ``(i, j, face_id)`` point from the matching whose flip is proper."""
    resonance: ResonanceGraph
    arcs: list
    out: list = field(repr=False)
    inc: list = field(repr=False)

    @property
    def sources(self):
        return [i for i in range(len(self.out)) if not self.inc[i]]

    @property
    def sinks(self):
        return [i for i in range(len(self.out)) if not self.out[i]]

    def topological_order(self):
        indeg = [len(x) for x in self.inc]
        order = [i for i, d in enumerate(indeg) if d == 0]
        k = 0
        while k < len(order):
            u = order[k]
            k += 1
            for w in self.out[u]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        return order

    def is_acyclic(self):
        return len(self.topological_order()) == len(self.out)

    def to_networkx(self):
        d = nx.DiGraph()
        d.add_nodes_from(range(len(self.out)))
        for i, j, f in self.arcs:
            d.add_edge(i, j, face=f)
        return d


def build_resonance_graph(g, cap=None):
    ms = enumerate_perfect_matchings(g, cap)
    index = {m: i for i, m in enumerate(ms)}
    adj = [[] for _ in ms]
    edges = []
    faces = g.finite_faces
    for i, m in enumerate(ms):
        for f in faces:
            if is_alternating_cycle(m, f.edge_mask, len(f.vertices)):
                j = index[m ^ f.edge_mask]
                adj[i].append((j, f.id))
                if i < j:
                    edges.append((i, j, f.id))
    edges.sort()
    return ResonanceGraph(g, ms, edges, index, adj)


def orient(z, g=None):
    """Direct every flip edge from the matching it is proper for."""
    g = z.graph if g is None else g
    out = [[] for _ in z.matchings]
    inc = [[] for _ in z.matchings]
    arcs = []
    for i, j, fid in z.edges:
        f = g.faces[fid]
        ci = face_flip_class(g, z.matchings[i], f)
        cj = face_flip_class(g, z.matchings[j], f)
        if ci == PROPER and cj == IMPROPER:
            a, b = i, j
        elif ci == IMPROPER and cj == PROPER:
            a, b = j, i
        else:
            raise OrientationAmbiguous(
                f"flip on face {fid} classifies as {ci}/{cj}")
        arcs.append((a, b, fid))
        out[a].append(b)
        inc[b].append(a)
    return ResonanceDigraph(z, arcs, out, inc)


class MatchingLattice:
    """The order M' <= M iff the digraph has a directed path M -> M'.

    ``down[i]`` is the bitset of elements below or equal to ``i``.
    Meets and joins are found by scanning bounds, not by formula.
    """

    def __init__(self, digraph):
        self.digraph = digraph
        n = len(digraph.out)
        self.n = n
        order = digraph.topological_order()
        if len(order) != n:
            raise NotALattice("Z-transformation digraph has a directed cycle")
        down = [0] * n
        for u in reversed(order):
            d = 1 << u
            for w in digraph.out[u]:
                d |= down[w]
            down[u] = d
        self.down = down
        up = [0] * n
        for u in range(n):
            for v in iter_bits(down[u]):
                up[v] |= 1 << u
        self.up = up
        tops = [i for i in range(n) if up[i] == 1 << i]
        bottoms = [i for i in range(n) if down[i] == 1 << i]
        if len(tops) != 1 or len(bottoms) != 1:
            raise NotALattice(f"{len(tops)} maximal and {len(bottoms)} minimal elements")
        self.top = tops[0]
        self.bottom = bottoms[0]
        self._meet = {}
        self._join = {}

    def leq(self, a, b):
        return bool((self.down[b] >> a) & 1)

    def covers(self):
        """Pairs ``(upper, lower)`` of the cover relation, from the order alone."""
        out = []
        for b in range(self.n):
            below = self.down[b] & ~(1 << b)
            shadowed = 0
            for c in iter_bits(below):
                shadowed |= self.down[c] & ~(1 << c)
            for c in iter_bits(below & ~shadowed):
                out.append((b, c))
        return sorted(out)

    def meet(self, a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in self._meet:
            common = self.down[a] & self.down[b]
            best = [c for c in iter_bits(common) if self.down[c] & common == common]
            if len(best) != 1:
                raise NotALattice(f"elements {a}, {b} have {len(best)} greatest lower bounds")
            self._meet[key] = best[0]
        return self._meet[key]

    def join(self, a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in self._join:
            common = self.up[a] & self.up[b]
            best = [c for c in iter_bits(common) if self.up[c] & common == common]
            if len(best) != 1:
                raise NotALattice(f"elements {a}, {b} have {len(best)} least upper bounds")
            self._join[key] = best[0]
        return self._join[key]

    def check_lattice(self):
        for a in range(self.n):
            for b in range(a, self.n):
                self.meet(a, b)
                self.join(a, b)

    def distributivity_witness(self, elements=None):
        """First triple violating x^(y v z) = (x^y) v (x^z), or None."""
        els = range(self.n) if elements is None else list(elements)
        for x in els:
            for y in els:
                for z in els:
                    if self.meet(x, self.join(y, z)) != \
                            self.join(self.meet(x, y), self.meet(x, z)):
                        return (x, y, z)
        return None

    def check_distributive(self):
        w = self.distributivity_witness()
        if w is not None:
            raise NotDistributive(f"distributive law fails at {w}")

    def ranks(self):
        """(shortest, longest) directed path length from the top to each element."""
        d = self.digraph
        lo = [None] * self.n
        hi = [None] * self.n
        lo[self.top] = hi[self.top] = 0
        for u in d.topological_order():
            if lo[u] is None:
                continue
            for w in d.out[u]:
                lo[w] = lo[u] + 1 if lo[w] is None else min(lo[w], lo[u] + 1)
                hi[w] = hi[u] + 1 if hi[w] is None else max(hi[w], hi[u] + 1)
        return lo, hi

    def is_graded(self):
        """Jordan-Dedekind: all directed paths between two elements have equal length."""
        lo, hi = self.ranks()
        return lo == hi

    @property
    def height(self):
        return self.ranks()[1][self.bottom]

    def is_sublattice(self, elements):
        s = set(elements)
        return all(self.meet(a, b) in s and self.join(a, b) in s for a in s for b in s)


def build_lattice(d, verify=True):
    lat = MatchingLattice(d)
    if verify:
        lat.check_lattice()
        lat.check_distributive()
    return lat


def height(lat):
    return lat.height


@dataclass
class Structure:
    """Everything derived from one graph's matchings, built once."""
    graph: object
    z: ResonanceGraph
    digraph: ResonanceDigraph
    lattice: MatchingLattice
    m0: int
    m1: int

    @property
    def i0(self):
        return self.z.index[self.m0]

    @property
    def i1(self):
        return self.z.index[self.m1]


@lru_cache(maxsize=128)
def structure(g):
    z = build_resonance_graph(g)
    d = orient(z, g)
    lat = build_lattice(d)
    m0, m1 = extremes(g)
    return Structure(g, z, d, lat, m0, m1)


def verify_height_formula(g, strict=True):
    """height of the lattice against the sum of phi(max, f) over finite faces."""
    s = structure(g)
    lhs = s.lattice.height
    rhs = sum(phi_vector(g, s.m1, s.m0))
    dist = s.z.distances_from(s.i1)[s.i0]
    check = Check("height_formula", lhs == rhs == dist, lhs=lhs, rhs=rhs,
                  witness={"distance_top_bottom": dist})
    if strict and not check.holds:
        raise FormulaViolated(f"height {lhs} != sum phi {rhs} (distance {dist})")
    return check


def verify_distance_formula(g, strict=True):
    """BFS distance in Z(G) against sum_f |phi(M,f) - phi(M',f)| for all pairs."""
    s = structure(g)
    vecs = [phi_vector(g, m, s.m0) for m in s.z.matchings]
    bad = []
    pairs = 0
    for i in range(len(vecs)):
        dist = s.z.distances_from(i)
        for j in range(i, len(vecs)):
            pairs += 1
            formula = sum(abs(a - b) for a, b in zip(vecs[i], vecs[j]))
            if formula != dist[j]:
                bad.append({"pair": [i, j], "distance": dist[j], "formula": formula})
    check = Check("distance_formula", not bad, lhs=pairs - len(bad), rhs=pairs,
                  witness=bad[:5] or None)
    if strict and bad:
        raise FormulaViolated(f"{len(bad)} matching pairs violate the distance formula")
    return check
