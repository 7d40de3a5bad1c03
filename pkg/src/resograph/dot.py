"""Graphviz DOT text for the objects of this package (no graphviz needed)."""


def _q(s):
    return '"' + str(s).replace('"', r'\"') + '"'


def plane_graph_dot(g):
    lines = [f"graph {_q(g.name or 'G')} {{", "  node [shape=circle];"]
    for i, v in enumerate(g.ids):
        x, y = g.coords[i]
        fill = "black" if g.colors[i] == "black" else "white"
        font = "white" if fill == "black" else "black"
        lines.append(f"  {_q(v)} [pos=\"{x},{y}!\", style=filled, fillcolor={fill}, "
                     f"fontcolor={font}];")
    for u, v in g.edges:
        lines.append(f"  {_q(g.ids[u])} -- {_q(g.ids[v])};")
    for f in g.faces:
        walk = " ".join(g.ids[v] for v in f.vertices)
        kind = "infinite" if f.is_infinite else "finite"
        lines.append(f"  // face {f.id} ({kind}): {walk}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _matching_label(z, i):
    g = z.graph
    pairs = sorted("".join(sorted((g.ids[u], g.ids[v]))) for u, v in
                   (g.edges[k] for k in range(len(g.edges)) if (z.matchings[i] >> k) & 1))
    return ",".join(pairs)


def resonance_dot(z):
    lines = ["graph Z {"]
    for i in range(len(z.matchings)):
        lines.append(f"  m{i} [tooltip={_q(_matching_label(z, i))}];")
    for i, j, f in z.edges:
        lines.append(f"  m{i} -- m{j} [label=\"s{f}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_dot(d):
    z = d.resonance
    lines = ["digraph Zdir {"]
    for i in range(len(z.matchings)):
        lines.append(f"  m{i} [tooltip={_q(_matching_label(z, i))}];")
    for a, b, f in sorted(d.arcs):
        lines.append(f"  m{a} -> m{b} [label=\"s{f}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def theta_dual_dot(theta, dual):
    """Theta(Z(G)) and the inner dual as two clusters of one drawing."""
    lines = ["graph ThetaVsDual {", "  subgraph cluster_theta {", "    label=\"Theta(Z(G))\";"]
    for v in sorted(theta.nodes()):
        lines.append(f"    t{v};")
    for a, b in sorted(tuple(sorted(e)) for e in theta.edges()):
        lines.append(f"    t{a} -- t{b};")
    lines += ["  }", "  subgraph cluster_dual {", "    label=\"inner dual\";"]
    for v in sorted(dual.nodes()):
        lines.append(f"    f{v} [label=\"s{v}\"];")
    for a, b in sorted(tuple(sorted(e)) for e in dual.edges()):
        lines.append(f"    f{a} -- f{b};")
    lines += ["  }", "}"]
    return "\n".join(lines) + "\n"
