"""Run every check on one graph and collect a :class:`GraphReport`."""

from __future__ import annotations

import networkx as nx

from .decomposition import (
    check_corollary,
    corollary_condition,
    find_rfd,
    is_forcing_face,
    reduce_face,
    reducible_faces,
    verify_face_structure,
    verify_lemma_height,
    verify_lemma_minmax,
    verify_main_theorem,
)
from .errors import ResographError, VerificationFailure
from .lattice import structure, verify_distance_formula, verify_height_formula
from .matchings import extremal_matching, phi_vector, psi
from .median import (
    Metric,
    graphs_isomorphic,
    inner_dual,
    is_median_graph,
    median_witness,
    theta_induced_graph,
    theta_is_transitive,
)
from .planar import is_elementary, is_two_connected, is_weakly_elementary
from .report import Check, GraphReport


def is_outerplane(g):
    return set(g.infinite_face.vertices) == set(range(g.n))


def lattice_checks(g):
    s = structure(g)
    d, lat = s.digraph, s.lattice
    arcs = sorted((a, b) for a, b, _ in d.arcs)
    covers = lat.covers()
    diff = sorted(set(arcs) ^ set(covers))
    yield Check("digraph_acyclic", d.is_acyclic())
    yield Check("source_sink_extremal", d.sources == [s.i1] and d.sinks == [s.i0],
                lhs={"sources": d.sources, "sinks": d.sinks},
                rhs={"max": s.i1, "min": s.i0})
    yield Check("distributive_lattice", lat.distributivity_witness() is None)
    yield Check("hasse_equals_digraph", not diff, lhs=len(arcs), rhs=len(covers),
                witness=diff[:5] or None)
    yield Check("jordan_dedekind", lat.is_graded(), lhs=lat.height)


def path_independence_check(g):
    """Flipping from every start, in two face orders, reaches the digraph's sink/source."""
    s = structure(g)
    bad = []
    for m in s.z.matchings:
        for choose in (None, lambda c: c[-1]):
            lo = extremal_matching(g, "min", start=m, choose=choose)
            hi = extremal_matching(g, "max", start=m, choose=choose)
            if lo != s.z.matchings[s.digraph.sinks[0]] or \
                    hi != s.z.matchings[s.digraph.sources[0]]:
                bad.append(s.z.index[m])
    return Check("extremal_path_independence", not bad, lhs=len(s.z) - len(set(bad)),
                 rhs=len(s.z), witness=sorted(set(bad))[:5] or None)


def phi_identity_checks(g):
    s = structure(g)
    vec = {m: phi_vector(g, m, s.m0) for m in s.z.matchings}
    faces = g.finite_faces
    bad_cover = []
    for a, b, fid in s.digraph.arcs:
        ma, mb = s.z.matchings[a], s.z.matchings[b]
        diff = [x - y for x, y in zip(vec[ma], vec[mb])]
        want = [1 if f.id == fid else 0 for f in faces]
        if diff != want:
            bad_cover.append((a, b))
    yield Check("cover_phi_identity", not bad_cover, lhs=len(s.digraph.arcs) - len(bad_cover),
                rhs=len(s.digraph.arcs), witness=bad_cover[:5] or None)
    bad_psi = 0
    total = 0
    for m1 in s.z.matchings:
        for m2 in s.z.matchings:
            for k, f in enumerate(faces):
                total += 1
                if vec[m1][k] - vec[m2][k] != psi(g, m1, m2, f):
                    bad_psi += 1
    yield Check("psi_identity", bad_psi == 0, lhs=total - bad_psi, rhs=total)
    yield Check("phi_bounds", all(v == 0 for v in vec[s.m0]) and all(v > 0 for v in vec[s.m1]),
                lhs=list(vec[s.m0]), rhs=list(vec[s.m1]))


def verify_graph(g, all_rfds=False, name=None):
    """Every check applicable to ``g``; failures are recorded, not raised."""
    rep = GraphReport(name or g.name or "graph")
    try:
        _collect(g, rep, all_rfds)
    except VerificationFailure as exc:
        rep.add(Check(type(exc).__name__, False, reason=str(exc)))
    except ResographError as exc:
        rep.add(Check("precondition", False, reason=f"{type(exc).__name__}: {exc}"))
    return rep


def _collect(g, rep, all_rfds):
    elem = is_elementary(g)
    rep.add(Check("elementary", elem if g.n > 2 else None,
                  lhs=elem, rhs=is_two_connected(g) if g.n > 2 else None,
                  reason=None if g.n > 2 else "two vertices"))
    if not elem:
        return
    if g.n > 2:
        rep.add(Check("elementary_iff_2connected", elem == is_two_connected(g)))
    rep.add(Check("weakly_elementary", is_weakly_elementary(g)))
    s = structure(g)
    zx = s.z.to_networkx()
    m = Metric(zx)
    wit = median_witness(zx, m)
    rep.add(Check("median", wit is None, lhs=len(s.z), witness=wit))
    rep.add(Check("theta_transitive", theta_is_transitive(zx, m)))
    for c in lattice_checks(g):
        rep.add(c)
    rep.add(path_independence_check(g))
    rep.add(verify_height_formula(g, strict=False))
    rep.add(verify_distance_formula(g, strict=False))
    for c in phi_identity_checks(g):
        rep.add(c)

    theta = theta_induced_graph(zx, m)
    dual = inner_dual(g)
    iso = graphs_isomorphic(theta, dual)
    if is_outerplane(g) and is_two_connected(g):
        rep.add(Check("outerplane_theta_dual", nx.is_tree(theta) and iso,
                      lhs=nx.is_tree(theta), rhs=iso))
    else:
        rep.add(Check("outerplane_theta_dual", None, lhs=nx.is_tree(theta), rhs=iso,
                      reason="not 2-connected outerplane"))

    if g.n < 4 or len(g.finite_faces) < 2:
        rep.add(Check("main_theorem", None, lhs=True, rhs=is_forcing_face(g, g.infinite_face),
                      reason="single face"))
        return
    for f in reducible_faces(g):
        p, _ = reduce_face(g, f)
        rep.add(verify_face_structure(g, f, p, strict=False))
        rep.add(verify_lemma_minmax(g, f, p, strict=False))
        rep.add(verify_lemma_height(g, f, p, strict=False))
    rfd = find_rfd(g, "first")
    rep.add(Check("rfd_steps_elementary", all(is_elementary(st.graph) for st in rfd.steps),
                  lhs=len(rfd)))
    main = rep.add(verify_main_theorem(g, strict=False, all_rfds=all_rfds))
    rep.summary.update(forcing=main.rhs, pce_sequence=main.lhs)
    rep.add(check_corollary(g, strict=False))


def summary_row(g, rep=None):
    """One line of the corpus table."""
    s = structure(g)
    forcing = is_forcing_face(g, g.infinite_face)
    if g.n >= 4 and len(g.finite_faces) >= 2:
        pce = find_rfd(g, "steered-by-pce").all_pce
    else:
        pce = True
    zx = s.z.to_networkx()
    theta = theta_induced_graph(zx)
    return {
        "graph": g.name,
        "V": g.n,
        "E": len(g.edges),
        "matchings": len(s.z),
        "height": s.lattice.height,
        "finite_faces": len(g.finite_faces),
        "forcing": forcing,
        "pce": pce,
        "median": is_median_graph(zx),
        "theta_iso_dual": graphs_isomorphic(theta, inner_dual(g)),
        "corollary_condition": corollary_condition(g),
        "ok": rep.ok if rep is not None else None,
    }
