"""Levi graphs of arrangements, the edge-subdivision transform, and exports.

The Levi graph has one vertex per singular point (``x0..x{s-1}``) and one per
line (``y0..y{k-1}``), joined exactly when the point lies on the line.  Since
two lines of an arrangement share at most one point, Levi graphs contain no
4-cycle, so their girth is at least 6.  An induced cycle necessarily
alternates between the two sides and therefore has even length 2i, visiting i
points and i lines.
"""

from __future__ import annotations

import json

import networkx as nx

from .arrangement import Arrangement, ArrangementError

__all__ = [
    "LeviGraph",
    "build_levi",
    "recover_arrangement",
    "girth",
    "subdivide",
    "export_dot",
    "export_json",
    "levi_from_json",
]


class LeviGraph:
    """
    Immutable bipartite incidence graph of an arrangement.

    ``point_adj[p]`` is the set of line ids through point p, ``line_adj[j]``
    the set of point ids on line j; ``edges`` lists (point, line) pairs in
    sorted order.  Vertex identity is index-based, so exports and witnesses
    are stable across runs.
    """

    __slots__ = ("s", "k", "edges", "point_adj", "line_adj")

    def __init__(self, s: int, k: int, edges) -> None:
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "k", k)
        pa: list[set[int]] = [set() for _ in range(s)]
        la: list[set[int]] = [set() for _ in range(k)]
        seen = set()
        for p, j in edges:
            if not (isinstance(p, int) and 0 <= p < s):
                raise ArrangementError(f"edge references unknown point {p!r}")
            if not (isinstance(j, int) and 0 <= j < k):
                raise ArrangementError(f"edge references unknown line {j!r}")
            if (p, j) in seen:
                raise ArrangementError(f"duplicate edge ({p}, {j})")
            seen.add((p, j))
            pa[p].add(j)
            la[j].add(p)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "point_adj", tuple(frozenset(x) for x in pa))
        object.__setattr__(self, "line_adj", tuple(frozenset(x) for x in la))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("LeviGraph is immutable")

    @property
    def n_vertices(self) -> int:
        return self.s + self.k

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LeviGraph):
            return NotImplemented
        return (self.s, self.k, self.edges) == (other.s, other.k, other.edges)

    def __hash__(self) -> int:
        return hash((self.s, self.k, self.edges))

    def __repr__(self) -> str:
        return f"LeviGraph(s={self.s}, k={self.k}, edges={self.n_edges})"

    def to_networkx(self) -> nx.Graph:
        """Plain graph with nodes 'x<i>' (points) and 'y<j>' (lines)."""
        g = nx.Graph()
        g.add_nodes_from((f"x{p}" for p in range(self.s)), bipartite=0)
        g.add_nodes_from((f"y{j}" for j in range(self.k)), bipartite=1)
        g.add_edges_from((f"x{p}", f"y{j}") for p, j in self.edges)
        return g


def build_levi(arr: Arrangement) -> LeviGraph:
    """Levi graph of an arrangement; |E| = sum of point multiplicities."""
    edges = [(p, j) for p, fs in enumerate(arr.point_lines) for j in fs]
    return LeviGraph(arr.s, arr.k, edges)


def recover_arrangement(g: LeviGraph) -> Arrangement:
    """Rebuild the incidence structure from line-vertex neighborhoods."""
    return Arrangement(g.k, [sorted(fs) for fs in g.point_adj])


def girth(g: LeviGraph) -> float:
    """Length of a shortest cycle (inf for forests)."""
    return nx.girth(g.to_networkx())


def subdivide(g: nx.Graph) -> nx.Graph:
    """
    Subdivide every edge of a simple graph once.

    The result is bipartite between original vertices and edge vertices
    ``('e', u, v)``.  Cycles of g correspond to cycles of twice the length;
    because chords are subdivided too, the lift of *any* cycle of g is an
    induced cycle of the subdivision, so the longest induced cycle of the
    output has length 2 * circumference(g) whenever g has a cycle.
    """
    out = nx.Graph()
    out.add_nodes_from(g.nodes())
    for u, v in g.edges():
        if u == v:
            continue
        a, b = sorted((u, v), key=repr)
        mid = ("e", a, b)
        out.add_edge(a, mid)
        out.add_edge(mid, b)
    return out


def export_dot(g: LeviGraph) -> str:
    """
    Deterministic DOT text: points as circles, lines as boxes.

    Vertex names follow the index convention (``x0``.., ``y0``..); edges are
    emitted in sorted order so output is byte-stable.
    """
    lines = ["graph levi {"]
    for p in range(g.s):
        lines.append(f'  x{p} [shape=circle, part="point"];')
    for j in range(g.k):
        lines.append(f'  y{j} [shape=box, part="line"];')
    for p, j in g.edges:
        lines.append(f"  x{p} -- y{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: LeviGraph, indent: int | None = None) -> str:
    """JSON mirror of the structure; round-trips through levi_from_json."""
    doc = {"s": g.s, "k": g.k, "edges": [[p, j] for p, j in g.edges]}
    return json.dumps(doc, indent=indent)


def levi_from_json(text: str) -> LeviGraph:
    """Parse export_json output; rejects malformed documents and unknown vertices."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or not {"s", "k", "edges"} <= set(doc):
        raise ArrangementError("document must be an object with 's', 'k', 'edges'")
    edges = doc["edges"]
    if not isinstance(edges, list) or any(len(e) != 2 for e in edges):
        raise ArrangementError("'edges' must be a list of [point, line] pairs")
    return LeviGraph(doc["s"], doc["k"], [tuple(e) for e in edges])
