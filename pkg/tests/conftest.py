from itertools import combinations

import pytest

from resograph.corpus import CORPUS_NAMES, builtin, load_corpus
from resograph.planar import parse_plane_graph


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def L2():
    return builtin("L2")


@pytest.fixture(scope="session")
def C6():
    return builtin("C6")


@pytest.fixture(scope="session")
def Q3():
    return builtin("Q3")


def graph(vertices, edges, name=None):
    """Build a PlaneGraph from ``{id: (x, y)}`` and id pairs."""
    return parse_plane_graph({
        "name": name,
        "vertices": [{"id": k, "x": x, "y": y} for k, (x, y) in vertices.items()],
        "edges": [list(e) for e in edges],
    })


def ryser_count(g):
    """Perfect matchings of a bipartite graph as the permanent of its biadjacency matrix."""
    black = [v for v in range(g.n) if g.colors[v] == "black"]
    white = [v for v in range(g.n) if g.colors[v] == "white"]
    if len(black) != len(white):
        return 0
    n = len(black)
    a = [[1 if (b, w) in g.edge_index else 0 for w in white] for b in black]
    total = 0
    for k in range(1, n + 1):
        for cols in combinations(range(n), k):
            prod = 1
            for row in a:
                prod *= sum(row[c] for c in cols)
                if not prod:
                    break
            total += (-1) ** k * prod
    return (-1) ** n * total


def brute_matchings(g):
    """All perfect matchings by trying every set of n/2 edges."""
    out = []
    for es in combinations(range(len(g.edges)), g.n // 2):
        vs = {v for k in es for v in g.edges[k]}
        if len(vs) == g.n:
            out.append(sum(1 << k for k in es))
    return sorted(out)


__all__ = ["graph", "ryser_count", "brute_matchings", "CORPUS_NAMES"]
