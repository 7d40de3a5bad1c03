"""Plane bipartite graphs with a straight-line drawing.

Vertices carry integer coordinates. The rotation system, faces, the outer
face and the 2-colouring are all derived from the drawing. Orientation
convention: a polygon is clockwise when its shoelace area is negative
(y axis pointing up).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
from pathlib import Path

import networkx as nx

from . import geometry
from .errors import (
    Disconnected,
    EulerViolation,
    GraphInputError,
    MalformedGraph,
    NotACycle,
    NotBipartite,
    NotPlaneDrawing,
    NotTwoConnected,
    PathNotPeripheral,
)

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class Face:
    """A face of a plane graph.

    ``vertices`` is the boundary walk. Finite faces are stored clockwise; the
    infinite face is stored in the order the outer walk is traced, which is
    also clockwise for the polygon it bounds.
    """
    id: int
    vertices: tuple
    is_infinite: bool
    edge_mask: int

    @property
    def boundary_walk(self):
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class OddPath:
    """A path given by its vertex sequence (indices into one graph).

    Produced by the decomposition code for the common boundary of a face and
    the outer face; callers needing odd length check :attr:`is_odd`.
    """
    vertices: tuple

    @property
    def length(self):
        return len(self.vertices) - 1

    @property
    def is_odd(self):
        return self.length % 2 == 1

    @property
    def internal(self):
        return self.vertices[1:-1]

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


def _angle_cmp(d1, d2):
    # counterclockwise from the positive x axis, exact on integers
    h1 = 0 if (d1[1] > 0 or (d1[1] == 0 and d1[0] > 0)) else 1
    h2 = 0 if (d2[1] > 0 or (d2[1] == 0 and d2[0] > 0)) else 1
    if h1 != h2:
        return h1 - h2
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


class PlaneGraph:
    """Immutable plane bipartite graph.

    Construct through :func:`parse_plane_graph` or :meth:`PlaneGraph.build`.
    """

    def __init__(self, ids, coords, colors, edges, name=None):
        self.ids = tuple(ids)
        self.coords = tuple(tuple(c) for c in coords)
        self.colors = tuple(colors)
        self.edges = tuple(edges)
        self.name = name
        self.index = {v: i for i, v in enumerate(self.ids)}
        self.edge_index = {}
        self.adj = [[] for _ in self.ids]
        for k, (u, v) in enumerate(self.edges):
            self.edge_index[(u, v)] = k
            self.edge_index[(v, u)] = k
            self.adj[u].append(v)
            self.adj[v].append(u)
        self.rotation = self._rotation()
        self.faces = self._trace_faces()
        self.infinite_face_id = next(f.id for f in self.faces if f.is_infinite)

    # -- construction ----------------------------------------------------

    @classmethod
    def build(cls, ids, coords, edges, colors=None, name=None):
        """Validate and construct. ``edges`` are pairs of vertex ids."""
        ids = list(ids)
        if len(set(ids)) != len(ids):
            raise MalformedGraph("duplicate vertex id")
        if not ids:
            raise MalformedGraph("graph has no vertices")
        coords = [(int(x), int(y)) for x, y in coords]
        if len(set(coords)) != len(coords):
            raise NotPlaneDrawing("two vertices share a position")
        index = {v: i for i, v in enumerate(ids)}
        pairs = []
        seen = set()
        for e in edges:
            if len(e) != 2:
                raise MalformedGraph(f"bad edge {e!r}")
            a, b = e
            if a not in index or b not in index:
                raise MalformedGraph(f"edge {e!r} names an unknown vertex")
            u, v = index[a], index[b]
            if u == v:
                raise MalformedGraph(f"loop at {a!r}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise MalformedGraph(f"multi-edge {a!r}-{b!r}")
            seen.add(key)
            pairs.append(key)
        _check_connected(len(ids), pairs)
        colors = _two_colour(len(ids), pairs, ids, colors)
        _check_plane(coords, pairs)
        g = cls(ids, coords, colors, pairs, name=name)
        if len(g.ids) - len(g.edges) + len(g.faces) != 2:
            raise EulerViolation(
                f"V - E + F = {len(g.ids) - len(g.edges) + len(g.faces)}")
        return g

    def subgraph(self, vertices, edges, name=None):
        """Subgraph on vertex indices / edge indices of this graph.

        Ids, coordinates and colours are inherited; indices are renumbered
        in increasing order of the old ones.
        """
        vs = sorted(set(vertices))
        es = sorted(set(edges))
        return PlaneGraph.build(
            [self.ids[v] for v in vs],
            [self.coords[v] for v in vs],
            [(self.ids[self.edges[k][0]], self.ids[self.edges[k][1]]) for k in es],
            colors=[self.colors[v] for v in vs],
            name=name,
        )

    # -- identity --------------------------------------------------------

    def _key(self):
        return (self.ids, self.coords, tuple(self.colors), frozenset(
            frozenset((self.ids[u], self.ids[v])) for u, v in self.edges))

    def __eq__(self, other):
        return isinstance(other, PlaneGraph) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return (f"<PlaneGraph{label} V={len(self.ids)} E={len(self.edges)} "
                f"F={len(self.faces)}>")

    # -- basic queries ---------------------------------------------------

    @property
    def n(self):
        return len(self.ids)

    @property
    def infinite_face(self):
        return self.faces[self.infinite_face_id]

    @property
    def finite_faces(self):
        return [f for f in self.faces if not f.is_infinite]

    def edge(self, u, v):
        try:
            return self.edge_index[(u, v)]
        except KeyError:
            raise NotACycle(f"{self.ids[u]}-{self.ids[v]} is not an edge") from None

    def edge_mask(self, vertex_cycle):
        """Bitmask of the edges of a closed vertex sequence."""
        m = 0
        k = len(vertex_cycle)
        for i in range(k):
            m |= 1 << self.edge(vertex_cycle[i], vertex_cycle[(i + 1) % k])
        return m

    def edge_key(self, k):
        u, v = self.edges[k]
        return frozenset((self.ids[u], self.ids[v]))

    def mask_to_keys(self, mask):
        return frozenset(self.edge_key(k) for k in iter_bits(mask))

    def keys_to_mask(self, keys):
        m = 0
        for key in keys:
            a, b = tuple(key)
            m |= 1 << self.edge_index[(self.index[a], self.index[b])]
        return m

    def face_key(self, f):
        """Id-based key identifying a face across subgraphs."""
        return self.mask_to_keys(f.edge_mask)

    def polygon(self, vertex_cycle):
        return [self.coords[v] for v in vertex_cycle]

    def to_networkx(self):
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h

    @cached_property
    def simple_cycles(self):
        """All simple cycles (length >= 4) as vertex tuples."""
        return [tuple(c) for c in nx.simple_cycles(self.to_networkx()) if len(c) >= 3]

    @cached_property
    def face_interior_points(self):
        return {f.id: geometry.interior_point(self.polygon(f.vertices))
                for f in self.finite_faces}

    # -- derived structure -----------------------------------------------

    def _rotation(self):
        rot = []
        for v in range(self.n):
            x, y = self.coords[v]

            def cmp(a, b, x=x, y=y):
                da = (self.coords[a][0] - x, self.coords[a][1] - y)
                db = (self.coords[b][0] - x, self.coords[b][1] - y)
                return _angle_cmp(da, db)
            ccw = sorted(self.adj[v], key=cmp_to_key(cmp))
            rot.append(tuple(reversed(ccw)))
        return tuple(rot)

    def _trace_faces(self):
        return trace_faces(self)


def _check_connected(n, pairs):
    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    dq = deque([0])
    while dq:
        u = dq.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                dq.append(w)
    if len(seen) != n:
        raise Disconnected(f"{n - len(seen)} vertices unreachable")


def _two_colour(n, pairs, ids, given):
    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    colour = [None] * n
    colour[0] = 0
    dq = deque([0])
    while dq:
        u = dq.popleft()
        for w in adj[u]:
            if colour[w] is None:
                colour[w] = 1 - colour[u]
                dq.append(w)
            elif colour[w] == colour[u]:
                raise NotBipartite(f"odd cycle through {ids[u]!r}-{ids[w]!r}")
    derived = [BLACK if c == 0 else WHITE for c in colour]
    if given is None or all(c is None for c in given):
        return derived
    given = list(given)
    for c in given:
        if c not in (BLACK, WHITE):
            raise MalformedGraph(f"unknown colour {c!r}")
    for u, v in pairs:
        if given[u] == given[v]:
            raise NotBipartite(f"stored colouring is not proper at {ids[u]!r}-{ids[v]!r}")
    return given


def _check_plane(coords, pairs):
    for i, (a, b) in enumerate(pairs):
        pa, pb = coords[a], coords[b]
        for v, p in enumerate(coords):
            if v != a and v != b and geometry.orient(pa, pb, p) == 0 \
                    and geometry.on_segment(p, pa, pb):
                raise NotPlaneDrawing(f"vertex {v} lies on edge {i}")
        for c, d in pairs[i + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            if geometry.segments_intersect(pa, pb, coords[c], coords[d]):
                raise NotPlaneDrawing(f"edges {a}-{b} and {c}-{d} cross")


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- operations ---------------------------------------------------------------

def parse_plane_graph(document, name=None):
    """Parse the JSON graph format (a string, bytes or an already-loaded dict).

    ``{"vertices": [{"id": str, "x": int, "y": int}], "edges": [[a, b], ...]}``;
    a vertex may carry an optional ``"color"`` which is then validated instead
    of derived.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise MalformedGraph(f"invalid JSON: {exc}") from None
    if not isinstance(document, dict) or "vertices" not in document \
            or "edges" not in document:
        raise MalformedGraph("expected an object with 'vertices' and 'edges'")
    ids, coords, colors = [], [], []
    for v in document["vertices"]:
        try:
            ids.append(str(v["id"]))
            x, y = v["x"], v["y"]
        except (KeyError, TypeError):
            raise MalformedGraph(f"bad vertex record {v!r}") from None
        if not (isinstance(x, int) and isinstance(y, int)) or \
                isinstance(x, bool) or isinstance(y, bool):
            raise MalformedGraph(f"coordinates of {v['id']!r} must be integers")
        coords.append((x, y))
        colors.append(v.get("color"))
    edges = [tuple(str(a) for a in e) for e in document["edges"]]
    return PlaneGraph.build(ids, coords, edges, colors=colors,
                            name=name or document.get("name"))


def load_graph(path):
    path = Path(path)
    try:
        return parse_plane_graph(path.read_text(encoding="utf-8"), name=path.stem)
    except GraphInputError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def to_document(g):
    return {
        "name": g.name,
        "vertices": [{"id": i, "x": x, "y": y, "color": c}
                     for i, (x, y), c in zip(g.ids, g.coords, g.colors)],
        "edges": [[g.ids[u], g.ids[v]] for u, v in g.edges],
    }


def trace_faces(g):
    """Trace the faces of ``g`` from its rotation system.

    Each dart (u, v) continues as (v, w) with w the clockwise successor of u
    around v, which keeps the face on the left. Bounded faces then come out
    counterclockwise and the outer face clockwise (non-positive area).
    """
    pos = [{w: i for i, w in enumerate(g.rotation[v])} for v in range(g.n)]
    seen = set()
    walks = []
    for u0 in range(g.n):
        for v0 in g.adj[u0]:
            if (u0, v0) in seen:
                continue
            walk = []
            u, v = u0, v0
            while (u, v) not in seen:
                seen.add((u, v))
                walk.append(u)
                rot = g.rotation[v]
                w = rot[(pos[v][u] + 1) % len(rot)]
                u, v = v, w
            walks.append(walk)
    if not walks:  # single vertex
        walks = [[0]]
    areas = [geometry.signed_area2(g.polygon(w)) for w in walks]
    outer = min(range(len(walks)), key=lambda i: areas[i])
    if sum(1 for a in areas if a <= 0) != 1:
        raise EulerViolation("could not identify a unique outer face")
    faces = []
    order = sorted(range(len(walks)), key=lambda i: (i == outer, sorted(walks[i])))
    for fid, i in enumerate(order):
        walk = walks[i]
        if i != outer:
            walk = list(reversed(walk))
        mask = 0
        for a, b in zip(walk, walk[1:] + walk[:1]):
            if a != b:
                mask |= 1 << g.edge_index[(a, b)]
        faces.append(Face(fid, tuple(walk), i == outer, mask))
    if len(faces) != len(g.edges) - g.n + 2:
        raise EulerViolation(f"{len(faces)} faces traced, expected "
                             f"{len(g.edges) - g.n + 2}")
    return tuple(faces)


def boundary_cycle(g):
    """The outer face as the boundary cycle of ``g``."""
    f = g.infinite_face
    if len(set(f.vertices)) != len(f.vertices) or len(f.vertices) < 3:
        raise NotTwoConnected("outer boundary walk repeats a vertex")
    return f


def cycle_clockwise_orientation(g, cycle):
    """Return ``cycle`` (vertex indices) ordered clockwise in the drawing."""
    cycle = list(cycle)
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle("a cycle needs at least three distinct vertices")
    for i in range(len(cycle)):
        g.edge(cycle[i], cycle[(i + 1) % len(cycle)])
    if geometry.signed_area2(g.polygon(cycle)) > 0:
        cycle.reverse()
    return tuple(cycle)


def contains_point(g, cycle, point):
    """1 / 0 / -1 for strictly inside / on / outside the polygon of ``cycle``."""
    return geometry.point_in_polygon(point, g.polygon(cycle))


def face_inside_cycle(g, face, cycle):
    return contains_point(g, cycle, g.face_interior_points[face.id]) == 1


def remove_common_boundary(g, p):
    """Delete the edges and internal vertices of ``p`` from ``g``.

    ``p`` must run along the outer boundary and lie on a single finite face
    with degree-2 internal vertices.
    """
    outer = g.infinite_face.edge_mask
    pmask = 0
    for u, v in p.edges():
        k = g.edge_index.get((u, v))
        if k is None:
            raise PathNotPeripheral(f"{g.ids[u]}-{g.ids[v]} is not an edge")
        pmask |= 1 << k
    if pmask & outer != pmask:
        raise PathNotPeripheral("path leaves the outer boundary")
    if not any(f.edge_mask & pmask == pmask for f in g.finite_faces):
        raise PathNotPeripheral("path is not on a single finite face")
    internal = set(p.internal)
    for v in internal:
        if len(g.adj[v]) != 2:
            raise PathNotPeripheral(f"internal vertex {g.ids[v]} has degree {len(g.adj[v])}")
    keep_v = [v for v in range(g.n) if v not in internal]
    keep_e = [k for k in range(len(g.edges)) if not (pmask >> k) & 1]
    return g.subgraph(keep_v, keep_e)


def is_elementary(g):
    """Allowed edges form a connected spanning subgraph."""
    from .matchings import allowed_edge_mask
    allowed = allowed_edge_mask(g.n, g.edges)
    if allowed is None:
        return False
    if g.n == 1:
        return False
    return _mask_spans_connected(g.n, g.edges, allowed)


def _mask_spans_connected(n, edges, mask):
    adj = [[] for _ in range(n)]
    for k in iter_bits(mask):
        u, v = edges[k]
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def is_two_connected(g):
    if g.n < 3:
        return False
    return nx.is_biconnected(g.to_networkx())


def interior_subgraph(g, cycle):
    """``cycle`` together with everything drawn inside it."""
    inside = set(cycle)
    for v in range(g.n):
        if v not in inside and contains_point(g, cycle, g.coords[v]) == 1:
            inside.add(v)
    cmask = g.edge_mask(cycle)
    keep = []
    for k, (u, v) in enumerate(g.edges):
        if u in inside and v in inside:
            if (cmask >> k) & 1:
                keep.append(k)
                continue
            a, b = g.coords[u], g.coords[v]
            mid = (Fraction(a[0] + b[0], 2), Fraction(a[1] + b[1], 2))
            if geometry.point_in_polygon(mid, g.polygon(cycle)) == 1:
                keep.append(k)
    return g.subgraph(inside, keep)


def is_weakly_elementary(g):
    """Every nice cycle together with its interior is elementary."""
    from .matchings import enumerate_perfect_matchings, is_alternating_cycle
    ms = enumerate_perfect_matchings(g)
    if not ms:
        return False
    for c in g.simple_cycles:
        cmask = g.edge_mask(c)
        if not any(is_alternating_cycle(m, cmask, len(c)) for m in ms):
            continue
        if not is_elementary(interior_subgraph(g, c)):
            return False
    return True
