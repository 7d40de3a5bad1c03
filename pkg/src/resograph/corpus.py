"""Builders for small plane bipartite graphs and the bundled corpus."""

from __future__ import annotations

from importlib import resources

from .planar import load_graph, parse_plane_graph

# pointy-top hexagon around the origin; an affine image of the regular one
_HEX = [(0, 2), (2, 1), (2, -1), (0, -2), (-2, -1), (-2, 1)]

CORPUS_NAMES = ("C4", "C6", "L2", "L3", "phenanthrene", "pyrene",
                "grid2x3", "Q3", "coronene")


def _doc(name, coords, edges):
    ids = {c: f"v{i}" for i, c in enumerate(coords)}
    return {
        "name": name,
        "vertices": [{"id": ids[c], "x": c[0], "y": c[1]} for c in coords],
        "edges": [[ids[a], ids[b]] for a, b in edges],
    }


def hexagonal_system(cells, name="hexagonal"):
    """Benzenoid from axial hexagon coordinates ``(q, r)``."""
    coords = []
    edges = set()
    for q, r in cells:
        cx, cy = 4 * q + 2 * r, 3 * r
        ring = [(cx + dx, cy + dy) for dx, dy in _HEX]
        for p in ring:
            if p not in coords:
                coords.append(p)
        for i in range(6):
            a, b = ring[i], ring[(i + 1) % 6]
            edges.add((min(a, b), max(a, b)))
    coords.sort()
    return _doc(name, coords, sorted(edges))


def cycle(k, name=None):
    """Even cycle drawn on integer points; squares for k = 4, hexagons for 6."""
    if k == 4:
        coords = [(0, 0), (2, 0), (2, 2), (0, 2)]
    elif k == 6:
        coords = list(_HEX)
    else:
        coords = [(i, 0) for i in range(k // 2)] + \
                 [(k // 2 - 1 - i, 3) for i in range(k // 2)]
        coords[k // 2 - 1] = (k // 2, 1)
        coords[k // 2] = (k // 2, 2)
    doc = _doc(name or f"C{k}", coords, [])
    ids = [v["id"] for v in doc["vertices"]]
    doc["edges"] = [[ids[i], ids[(i + 1) % k]] for i in range(k)]
    return doc


def grid(rows, cols, name=None):
    """``rows`` x ``cols`` squares."""
    coords = [(2 * x, 2 * y) for y in range(rows + 1) for x in range(cols + 1)]
    edges = []
    for x, y in coords:
        if x + 2 <= 2 * cols:
            edges.append(((x, y), (x + 2, y)))
        if y + 2 <= 2 * rows:
            edges.append(((x, y), (x, y + 2)))
    return _doc(name or f"grid{rows}x{cols}", coords, edges)


def cube(name="Q3"):
    """The 3-cube drawn as a square inside a square."""
    outer = [(0, 0), (6, 0), (6, 6), (0, 6)]
    inner = [(2, 2), (4, 2), (4, 4), (2, 4)]
    edges = []
    for i in range(4):
        edges.append((outer[i], outer[(i + 1) % 4]))
        edges.append((inner[i], inner[(i + 1) % 4]))
        edges.append((outer[i], inner[i]))
    return _doc(name, outer + inner, edges)


def path(k, name=None):
    coords = [(2 * i, 0) for i in range(k)]
    return _doc(name or f"P{k}", coords, [(coords[i], coords[i + 1]) for i in range(k - 1)])


def builtin_documents():
    return {
        "C4": cycle(4, "C4"),
        "C6": cycle(6, "C6"),
        "L2": hexagonal_system([(0, 0), (1, 0)], "L2"),
        "L3": hexagonal_system([(0, 0), (1, 0), (2, 0)], "L3"),
        "phenanthrene": hexagonal_system([(0, 0), (1, 0), (1, 1)], "phenanthrene"),
        "pyrene": hexagonal_system([(0, 0), (1, 0), (0, 1), (1, -1)], "pyrene"),
        "grid2x3": grid(2, 3, "grid2x3"),
        "Q3": cube("Q3"),
        "coronene": hexagonal_system(
            [(0, 0), (1, 0), (-1, 0), (0, 1), (-1, 1), (0, -1), (1, -1)], "coronene"),
    }


def corpus_dir():
    return resources.files("resograph") / "data"


def load_corpus(names=CORPUS_NAMES):
    """The bundled corpus as ``{name: PlaneGraph}``."""
    base = corpus_dir()
    return {n: load_graph(base / f"{n}.json") for n in names}


def builtin(name):
    return parse_plane_graph(builtin_documents()[name])
