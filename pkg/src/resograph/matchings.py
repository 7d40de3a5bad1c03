"""Perfect matchings of plane bipartite graphs and their alternating structure.

A perfect matching is an ``int`` bitmask over the graph's edge indices; the
integer value is also the canonical sort key.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CountLimitExceeded, NotACycle, NotConvergent
from .planar import BLACK, WHITE, cycle_clockwise_orientation, face_inside_cycle, iter_bits

DEFAULT_CAP = 100_000

PROPER = "proper"
IMPROPER = "improper"
NOT_ALTERNATING = "not_alternating"


@dataclass(frozen=True)
class AlternatingCycle:
    vertices: tuple     # clockwise
    edge_mask: int
    cls: str            # w.r.t. the first matching it was built from

    def __len__(self):
        return len(self.vertices)


def _enumerate(n, edges, cap=DEFAULT_CAP, stop_at=None):
    """All perfect matchings of an abstract graph as sorted bitmasks.

    Backtracking on the uncovered vertex with fewest free neighbours; a vertex
    with no free neighbour prunes the branch, one free neighbour forces it.
    """
    if n % 2:
        return []
    inc = [[] for _ in range(n)]
    for k, (u, v) in enumerate(edges):
        inc[u].append((v, k))
        inc[v].append((u, k))
    covered = [False] * n
    out = []
    limit = stop_at if stop_at is not None else cap + 1

    def rec(mask, left):
        if len(out) >= limit:
            return
        if left == 0:
            out.append(mask)
            return
        best, best_opts = -1, None
        for v in range(n):
            if covered[v]:
                continue
            opts = [(w, k) for w, k in inc[v] if not covered[w]]
            if not opts:
                return
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
                if len(opts) == 1:
                    break
        covered[best] = True
        for w, k in best_opts:
            covered[w] = True
            rec(mask | (1 << k), left - 2)
            covered[w] = False
        covered[best] = False

    rec(0, n)
    if stop_at is None and len(out) > cap:
        raise CountLimitExceeded(f"more than {cap} perfect matchings")
    out.sort()
    return out


def count_perfect_matchings(n, edges, limit=None):
    """Number of perfect matchings, stopping early once ``limit`` is reached."""
    return len(_enumerate(n, edges, stop_at=limit))


_cap = DEFAULT_CAP


def set_matching_cap(cap):
    """Change the enumeration cap used when none is passed explicitly."""
    global _cap
    if cap < 2:
        raise ValueError("matching cap must be at least 2")
    _cap = cap
    enumerate_perfect_matchings.cache_clear()


@lru_cache(maxsize=256)
def enumerate_perfect_matchings(g, cap=None):
    """Every perfect matching of ``g``, sorted by bitmask value."""
    return tuple(_enumerate(g.n, g.edges, _cap if cap is None else cap))


def allowed_edge_mask(n, edges):
    """Union of all perfect matchings, or None when there are none."""
    ms = _enumerate(n, edges)
    if not ms:
        return None
    mask = 0
    for m in ms:
        mask |= m
    return mask


def matching_edges(g, m):
    return [g.edges[k] for k in iter_bits(m)]


def is_perfect_matching(g, m):
    seen = set()
    for u, v in matching_edges(g, m):
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return len(seen) == g.n


def is_alternating_cycle(m, cycle_mask, length):
    # the matched edges of a perfect matching on a cycle are vertex-disjoint,
    # so half of them matched means they alternate
    return length % 2 == 0 and bin(m & cycle_mask).count("1") * 2 == length


def classify_cycle(g, m, cycle):
    """``proper``, ``improper`` or ``not_alternating`` for a vertex cycle."""
    cw = cycle_clockwise_orientation(g, cycle)
    if not is_alternating_cycle(m, g.edge_mask(cw), len(cw)):
        return NOT_ALTERNATING
    for i, u in enumerate(cw):
        v = cw[(i + 1) % len(cw)]
        if (m >> g.edge_index[(u, v)]) & 1:
            if g.colors[u] == WHITE and g.colors[v] == BLACK:
                return PROPER
            return IMPROPER
    raise NotACycle("alternating cycle without a matched edge")  # unreachable


def _split_cycles(g, mask):
    """Decompose an edge set where every touched vertex has degree 2."""
    adj = {}
    for u, v in matching_edges(g, mask):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = set()
    cycles = []
    for start in sorted(adj):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, adj[start][0]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(cyc)
    return cycles


def symmetric_difference_cycles(g, m1, m2):
    """The vertex-disjoint (m1, m2)-alternating cycles making up m1 xor m2.

    Each cycle is oriented clockwise and classified with respect to ``m1``.
    """
    out = []
    for cyc in _split_cycles(g, m1 ^ m2):
        cw = cycle_clockwise_orientation(g, cyc)
        out.append(AlternatingCycle(cw, g.edge_mask(cw), classify_cycle(g, m1, cw)))
    return out


def is_face_resonant(g, m, f):
    return is_alternating_cycle(m, f.edge_mask, len(f.vertices))


def face_flip_class(g, m, f):
    """Like :func:`classify_cycle` for a face, using its stored clockwise walk."""
    if not is_alternating_cycle(m, f.edge_mask, len(f.vertices)):
        return NOT_ALTERNATING
    vs = f.vertices
    if f.is_infinite:
        return classify_cycle(g, m, vs)
    for i, u in enumerate(vs):
        v = vs[(i + 1) % len(vs)]
        if (m >> g.edge_index[(u, v)]) & 1:
            return PROPER if g.colors[u] == WHITE else IMPROPER
    return NOT_ALTERNATING


def is_path_alternating(g, m, p):
    flags = [(m >> g.edge_index[e]) & 1 for e in p.edges()]
    return all(flags[i] != flags[i + 1] for i in range(len(flags) - 1))


def is_weakly_augmenting(g, m, p):
    """Single unmatched edge, or an alternating path whose end edges are unmatched."""
    flags = [(m >> g.edge_index[e]) & 1 for e in p.edges()]
    if len(flags) == 1:
        return flags[0] == 0
    if any(flags[i] == flags[i + 1] for i in range(len(flags) - 1)):
        return False
    return flags[0] == 0 and flags[-1] == 0


def extremal_matching(g, side, start=None, choose=None):
    """The minimum (``side="min"``) or maximum (``"max"``) perfect matching.

    Starting from ``start`` (default: the first enumerated matching), flip a
    proper (for min) or improper (for max) alternating finite face until none
    is left. ``choose`` picks among the candidate faces (default: lowest id).
    Afterwards every simple cycle of ``g`` is scanned to confirm that no
    alternating cycle of the excluded class survives.
    """
    if side not in ("min", "max"):
        raise ValueError("side must be 'min' or 'max'")
    ms = enumerate_perfect_matchings(g)
    if not ms:
        raise ValueError("graph has no perfect matching")
    bad = PROPER if side == "min" else IMPROPER
    m = ms[0] if start is None else start
    faces = g.finite_faces
    budget = len(ms) * max(1, len(faces))
    steps = 0
    while True:
        cand = [f for f in faces if face_flip_class(g, m, f) == bad]
        if not cand:
            break
        f = cand[0] if choose is None else choose(cand)
        m ^= f.edge_mask
        steps += 1
        if steps > budget:
            raise NotConvergent(f"no fixpoint after {steps} flips")
    for c in g.simple_cycles:
        if classify_cycle(g, m, c) == bad:
            raise NotConvergent(
                f"{bad} alternating cycle {[g.ids[v] for v in c]} survives; "
                "graph is not weakly elementary")
    return m


@lru_cache(maxsize=256)
def extremes(g):
    """(min, max) perfect matching of ``g``."""
    return extremal_matching(g, "min"), extremal_matching(g, "max")


def phi(g, m, f, m0=None):
    """Number of cycles of m xor m0 (m0 the minimum) with ``f`` inside them."""
    if m0 is None:
        m0 = extremes(g)[0]
    return sum(1 for cyc in _split_cycles(g, m ^ m0) if face_inside_cycle(g, f, cyc))


def psi(g, m1, m2, f):
    """Proper minus improper m1-alternating cycles of m1 xor m2 around ``f``."""
    total = 0
    for c in symmetric_difference_cycles(g, m1, m2):
        if face_inside_cycle(g, f, c.vertices):
            total += 1 if c.cls == PROPER else -1
    return total


def phi_vector(g, m, m0=None):
    """``phi`` for every finite face, in face order."""
    if m0 is None:
        m0 = extremes(g)[0]
    cycles = _split_cycles(g, m ^ m0)
    return tuple(sum(1 for c in cycles if face_inside_cycle(g, f, c))
                 for f in g.finite_faces)
