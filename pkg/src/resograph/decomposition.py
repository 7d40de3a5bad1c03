"""Reducible faces, reducible face decompositions and the peripheral convex
expansion (PCE) criteria built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from . import geometry
from .errors import (
    AlternationViolated,
    DegenerateBaseFace,
    DisconnectedCommonBoundary,
    GraphInputError,
    LemmaViolated,
    NoDecompositionFound,
    NotPeripheral,
    OddFaceBoundary,
    PathNotPeripheral,
    TheoremViolated,
)
from .lattice import structure
from .matchings import (
    _enumerate,
    enumerate_perfect_matchings,
    is_face_resonant,
    is_path_alternating,
    is_weakly_augmenting,
    phi_vector,
)
from .median import (
    Metric,
    graphs_isomorphic,
    is_convex_subset,
    is_median_graph,
    is_peripheral_expansion_step,
    theta_classes,
)
from .planar import OddPath, is_elementary, iter_bits, remove_common_boundary
from .report import Check


@dataclass
class MatchingPartition:
    """Perfect matchings split by whether the boundary path P is weakly
    augmenting (``minus``) or not (``plus``), and whether face s is resonant."""
    minus_resonant: tuple
    minus_not_resonant: tuple
    plus_resonant: tuple
    plus_not_resonant: tuple

    @property
    def minus(self):
        return tuple(sorted(self.minus_resonant + self.minus_not_resonant))

    @property
    def plus(self):
        return tuple(sorted(self.plus_resonant + self.plus_not_resonant))

    def cells(self):
        return {
            "P-,ds": self.minus_resonant,
            "P-,not ds": self.minus_not_resonant,
            "P+,ds": self.plus_resonant,
            "P+,not ds": self.plus_not_resonant,
        }


@dataclass
class RFDStep:
    graph: object           # G_i
    face: object            # s_i, a Face of G_i
    path: OddPath | None    # P_i inside G_i; None for the base face
    pce: bool | None        # None for the base face
    height: int

    @property
    def face_key(self):
        return self.graph.face_key(self.face)


@dataclass
class ReducibleFaceDecomposition:
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    @property
    def all_pce(self):
        return all(st.pce for st in self.steps[1:])

    @property
    def face_sequence(self):
        return [st.face_key for st in self.steps]

    @property
    def uses_single_edge_ears(self):
        return any(st.path is not None and st.path.length == 1 for st in self.steps)


# -- faces and paths ----------------------------------------------------------

def peripheral_faces(g):
    outer = g.infinite_face.edge_mask
    return [f for f in g.finite_faces if f.edge_mask & outer]


def common_boundary_path(g, s):
    """The part of the outer boundary lying on finite face ``s``, as a path."""
    outer = g.infinite_face.edge_mask
    shared = s.edge_mask & outer
    if not shared:
        raise NotPeripheral(f"face {s.id} has no edge on the outer boundary")
    if shared == s.edge_mask:
        raise DegenerateBaseFace(f"face {s.id} is the whole graph")
    vs = s.vertices
    k = len(vs)
    on = [bool((shared >> g.edge_index[(vs[i], vs[(i + 1) % k])]) & 1) for i in range(k)]
    starts = [i for i in range(k) if on[i] and not on[i - 1]]
    if len(starts) != 1:
        raise DisconnectedCommonBoundary(
            f"face {s.id} meets the outer boundary in {len(starts)} segments")
    i = starts[0]
    path = [vs[i]]
    while on[i % k]:
        path.append(vs[(i + 1) % k])
        i += 1
    return OddPath(tuple(path))


def _ear_is_exterior(g, h, p):
    """Internal vertices and edge midpoints of ``p`` lie outside the drawing of ``h``."""
    from fractions import Fraction
    poly = [h.coords[v] for v in h.infinite_face.vertices]
    for v in p.internal:
        if geometry.point_in_polygon(g.coords[v], poly) != -1:
            return False
    for u, v in p.edges():
        a, b = g.coords[u], g.coords[v]
        mid = (Fraction(a[0] + b[0], 2), Fraction(a[1] + b[1], 2))
        if geometry.point_in_polygon(mid, poly) != -1:
            return False
    return True


@lru_cache(maxsize=1024)
def _reduce(g, face_id):
    """(P, H) when face ``face_id`` of ``g`` is reducible, else None."""
    s = g.faces[face_id]
    if s.is_infinite:
        return None
    try:
        p = common_boundary_path(g, s)
    except (NotPeripheral, DisconnectedCommonBoundary, DegenerateBaseFace):
        return None
    if not p.is_odd:
        return None
    try:
        h = remove_common_boundary(g, p)
    except (PathNotPeripheral, GraphInputError):
        return None
    if h.n < 2 or not is_elementary(h):
        return None
    return p, h


def is_reducible_face(g, s):
    return _reduce(g, s.id) is not None


def reducible_faces(g):
    return [f for f in g.finite_faces if is_reducible_face(g, f)]


def reduce_face(g, s):
    """(P, H) for a reducible face ``s``."""
    got = _reduce(g, s.id)
    if got is None:
        raise NotPeripheral(f"face {s.id} is not reducible")
    return got


# -- matching partition -------------------------------------------------------

def partition_matchings(g, s, p):
    """Split all perfect matchings of ``g`` into the four cells for (s, P)."""
    cells = ([], [], [], [])
    for m in enumerate_perfect_matchings(g):
        if not is_path_alternating(g, m, p):
            raise AlternationViolated(
                f"common boundary of face {s.id} is not alternating for a matching")
        minus = is_weakly_augmenting(g, m, p)
        res = is_face_resonant(g, m, s)
        cells[(0 if minus else 2) + (0 if res else 1)].append(m)
    return MatchingPartition(*(tuple(c) for c in cells))


def is_pce_step(g, s, p):
    return not partition_matchings(g, s, p).plus_not_resonant


# -- forcing faces ------------------------------------------------------------

def forcing_remainder(g, f):
    """Vertices, edges (reindexed) and id list of ``g`` minus the vertices of ``f``."""
    gone = set(f.vertices)
    keep = [v for v in range(g.n) if v not in gone]
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return keep, edges


def is_forcing_face(g, f):
    if len(f.vertices) % 2:
        raise OddFaceBoundary(f"face {f.id} has an odd boundary")
    keep, edges = forcing_remainder(g, f)
    if not keep:
        return True
    return len(_enumerate(len(keep), edges, stop_at=2)) == 1


def forcing_witness(g, f):
    """Two perfect matchings of the remainder (as id pairs), or None."""
    keep, edges = forcing_remainder(g, f)
    ms = _enumerate(len(keep), edges, stop_at=2)
    if len(ms) < 2:
        return None
    return [sorted(sorted((g.ids[keep[edges[k][0]]], g.ids[keep[edges[k][1]]]))
                   for k in iter_bits(m)) for m in ms]


# -- reducible face decompositions -------------------------------------------

def _base_step(g):
    return RFDStep(g, g.finite_faces[0], None, None, structure(g).lattice.height)


def _candidates(g):
    out = []
    for s in g.finite_faces:
        got = _reduce(g, s.id)
        if got is None:
            continue
        p, h = got
        if not _ear_is_exterior(g, h, p):
            continue
        out.append((s, p, h, is_pce_step(g, s, p)))
    return out


@lru_cache(maxsize=1024)
def _all_rfds(g):
    if len(g.finite_faces) == 1:
        return [[_base_step(g)]]
    out = []
    for s, p, h, pce in _candidates(g):
        step = RFDStep(g, s, p, pce, structure(g).lattice.height)
        for tail in _all_rfds(h):
            out.append(tail + [step])
    return out


@lru_cache(maxsize=1024)
def _one_rfd(g, pce_only):
    if len(g.finite_faces) == 1:
        return [_base_step(g)]
    cands = _candidates(g)
    cands.sort(key=lambda c: not c[3])
    for s, p, h, pce in cands:
        if pce_only and not pce:
            continue
        tail = _one_rfd(h, pce_only)
        if tail is not None:
            return tail + [RFDStep(g, s, p, pce, structure(g).lattice.height)]
    return None


def find_rfd(g, policy="first"):
    """Reducible face decomposition(s) of ``g`` found by peeling faces.

    ``first`` returns one decomposition, ``all`` a list of every one, and
    ``steered-by-pce`` one whose steps are all PCE steps when such exists
    (otherwise any decomposition).
    """
    if g.n < 4 and policy != "all":
        raise NoDecompositionFound("decompositions need at least four vertices")
    if policy == "all":
        found = [ReducibleFaceDecomposition(list(s)) for s in _all_rfds(g)]
        if not found:
            raise NoDecompositionFound(f"{g!r} has no reducible face decomposition")
        return found
    if policy == "first":
        seq = _one_rfd(g, False)
    elif policy == "steered-by-pce":
        seq = _one_rfd(g, True) or _one_rfd(g, False)
    else:
        raise ValueError(f"unknown policy {policy!r}")
    if seq is None:
        raise NoDecompositionFound(f"{g!r} has no reducible face decomposition")
    return ReducibleFaceDecomposition(list(seq))


# -- lemma and theorem checks -------------------------------------------------

def verify_lemma_minmax(g, s, p, strict=True):
    """PCE step iff exactly one extremal matching lies in the (P+, ds) cell."""
    part = partition_matchings(g, s, p)
    st = structure(g)
    cell = set(part.plus_resonant)
    lhs = not part.plus_not_resonant
    rhs = (st.m0 in cell) != (st.m1 in cell)
    check = Check(f"lemma_minmax[face {s.id}]", lhs == rhs, lhs=lhs, rhs=rhs,
                  witness={"min_in_cell": st.m0 in cell, "max_in_cell": st.m1 in cell,
                           "P+,not ds": len(part.plus_not_resonant)})
    if strict and not check.holds:
        raise LemmaViolated(f"min/max lemma fails for face {s.id}")
    return check


def verify_lemma_height(g, s, p, strict=True):
    """PCE step iff height(G) = height(H) + 1; always height(G) >= height(H) + 1."""
    if g.n < 4 or len(g.finite_faces) < 2:
        return Check(f"lemma_height[face {s.id}]", None, reason="base face")
    h = remove_common_boundary(g, p)
    hg = structure(g).lattice.height
    hh = structure(h).lattice.height
    lhs = is_pce_step(g, s, p)
    rhs = hg == hh + 1
    holds = (lhs == rhs) and hg >= hh + 1
    check = Check(f"lemma_height[face {s.id}]", holds, lhs=lhs, rhs=rhs,
                  witness={"height_G": hg, "height_H": hh})
    if strict and not holds:
        raise LemmaViolated(f"height lemma fails for face {s.id}: {hg} vs {hh}")
    return check


def verify_main_theorem(g, strict=True, all_rfds=False):
    """All-PCE decomposition exists iff the infinite face is forcing.

    When the face is forcing also checks height = #finite faces, that the
    extremal matchings differ exactly on the outer boundary, and phi(max, f) = 1.
    With ``all_rfds`` every decomposition is examined: each must be all-PCE
    exactly when the face is forcing, and heights must grow by >= 1 per step.
    """
    st = structure(g)
    rfd = find_rfd(g, "steered-by-pce")
    lhs = rfd.all_pce
    rhs = is_forcing_face(g, g.infinite_face)
    witness = {
        "rfd_faces": [sorted(sorted(e) for e in key) for key in rfd.face_sequence],
        "step_pce": [s.pce for s in rfd.steps[1:]],
        "heights": [s.height for s in rfd.steps],
    }
    holds = lhs == rhs
    if not rhs:
        witness["remainder_matchings"] = forcing_witness(g, g.infinite_face)
    else:
        nfaces = len(g.finite_faces)
        phis = phi_vector(g, st.m1, st.m0)
        extras = {
            "height_equals_faces": st.lattice.height == nfaces,
            "extremes_differ_on_boundary": st.m0 ^ st.m1 == g.infinite_face.edge_mask,
            "phi_max_all_one": all(v == 1 for v in phis),
        }
        witness.update(extras)
        holds = holds and all(extras.values())
    if all_rfds:
        every = find_rfd(g, "all")
        agree = all(r.all_pce == rhs for r in every)
        steps_ok = all(b.height >= a.height + 1 and ((b.height == a.height + 1) == b.pce)
                       for r in every for a, b in zip(r.steps, r.steps[1:]))
        witness.update({"rfd_count": len(every), "every_rfd_agrees": agree,
                        "height_steps_ok": steps_ok,
                        "single_edge_ears": any(r.uses_single_edge_ears for r in every)})
        holds = holds and agree and steps_ok
    check = Check("main_theorem", holds, lhs=lhs, rhs=rhs, witness=witness)
    if strict and not holds:
        raise TheoremViolated(f"main theorem fails on {g!r}: {witness}")
    return check


def corollary_condition(g):
    outer = set(g.infinite_face.vertices)
    return all(outer & set(f.vertices) for f in g.finite_faces)


def check_corollary(g, strict=True):
    """Every finite face touching the boundary forces an all-PCE decomposition."""
    if not corollary_condition(g):
        return Check("corollary", None, reason="some finite face has no boundary vertex")
    rfd = find_rfd(g, "steered-by-pce") if g.n >= 4 else None
    lhs = True if rfd is None else rfd.all_pce
    check = Check("corollary", lhs, lhs=True, rhs=lhs)
    if strict and not lhs:
        raise TheoremViolated(f"corollary fails on {g!r}")
    return check


def verify_face_structure(g, s, p, strict=True):
    """Structure of Z(G) around the edges F labelled by reducible face ``s``.

    F is one theta class; Z - F splits into the P- and P+ cells; F matches the
    two resonant cells isomorphically; resonant cells are convex in their
    component; the P- component is isomorphic to Z(H); all F-arcs point the
    same way; the four cells are distributive sublattices; and a PCE step has
    a structural peripheral-expansion witness.
    """
    st = structure(g)
    z = st.z
    zx = z.to_networkx()
    part = partition_matchings(g, s, p)

    def idx(ms):
        return {z.index[m] for m in ms}

    minus, plus = idx(part.minus), idx(part.plus)
    mres, pres = idx(part.minus_resonant), idx(part.plus_resonant)
    F = [(i, j) for i, j, f in z.edges if f == s.id]
    res = {}

    fset = {frozenset(e) for e in F}
    classes = [{frozenset(e) for e in c} for c in theta_classes(zx)]
    res["F_is_theta_class"] = fset in classes

    rest = zx.copy()
    rest.remove_edges_from(F)
    comps = sorted((set(c) for c in nx.connected_components(rest)), key=min)
    res["two_components"] = len(comps) == 2 and {frozenset(c) for c in comps} == \
        {frozenset(minus), frozenset(plus)}

    ends = [(i if i in mres else j, j if i in mres else i) for i, j in F]
    bij = dict(ends)
    res["F_matching"] = (len(bij) == len(F) == len(mres) == len(pres)
                         and set(bij) == mres and set(bij.values()) == pres)
    res["F_isomorphism"] = res["F_matching"] and all(
        zx.has_edge(a, b) == zx.has_edge(bij[a], bij[b])
        for a in mres for b in mres if a < b)

    zm, zp = zx.subgraph(minus).copy(), zx.subgraph(plus).copy()
    res["resonant_cells_convex"] = (
        nx.is_connected(zm) and nx.is_connected(zp)
        and is_convex_subset(zm, mres, Metric(zm)) and is_convex_subset(zp, pres, Metric(zp)))
    res["components_median"] = is_median_graph(zm) and is_median_graph(zp)

    h = remove_common_boundary(g, p)
    zh = structure(h).z.to_networkx()
    res["minus_iso_Z_H"] = graphs_isomorphic(zm, zh)
    # explicit bijection: drop the path edges
    pmask = 0
    for e in p.edges():
        pmask |= 1 << g.edge_index[e]
    hm = {h.keys_to_mask(g.mask_to_keys(m & ~pmask)) for m in part.minus}
    res["restriction_bijective"] = hm == set(enumerate_perfect_matchings(h))

    arcs = {(a, b) for a, b, f in st.digraph.arcs if f == s.id}
    res["F_uniformly_directed"] = all(a in mres for a, _ in arcs) or \
        all(a in pres for a, _ in arcs)

    lat = st.lattice
    subl = {}
    for name, cell in (("P-", minus), ("P+", plus), ("P-,ds", mres), ("P+,ds", pres)):
        subl[name] = lat.is_sublattice(cell) and lat.distributivity_witness(cell) is None
    res["distributive_sublattices"] = all(subl.values())

    pce = not part.plus_not_resonant
    witness = is_peripheral_expansion_step(zx, zh)
    res["pce_has_expansion_witness"] = (witness is not None) if pce else True

    holds = all(res.values())
    check = Check(f"face_structure[face {s.id}]", holds, lhs=pce,
                  rhs=witness is not None,
                  witness={**res, "cell_sizes": {k: len(v) for k, v in part.cells().items()},
                           "sublattices": subl})
    if strict and not holds:
        failed = [k for k, v in res.items() if not v]
        raise TheoremViolated(f"face {s.id} of {g!r}: {failed}")
    return check
