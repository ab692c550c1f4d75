"""Generators for the extremal chain family.

The seed is a fan: the edge-maximal outerplane graph whose chords all share
an apex. The gadget graph for cycle length k is built from a face of size
k+1 by merging k of its edges each with an outer edge of a fan on k-1
vertices, leaving one distinguished face edge free. Chains arise by
repeatedly merging a fresh gadget's distinguished edge onto a designated
boundary edge of the graph built so far, which keeps the result outerplanar
and free of k-cycles while adding exactly k^2-2k-1 vertices and k(2k-5)
edges per step.

With m merges the chain has n = (k-1) + m(k^2-2k-1) vertices and
e = (2k-5)(1+mk) edges, which meets the certified upper bound with
equality: these n are exactly the sharp residues n == k-1 (mod k^2-2k-1).

Vertex numbering is fully deterministic; the distinguished edge of the
gadget is always (0, k) and each merge attaches at the previous gadget's
far fan, so repeated runs produce byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, Graph, edge_key, make_graph
from .embedding import OuterplaneEmbedding, recognize_outerplanar


@dataclass(frozen=True)
class ChainParams:
    """Chain shape: cycle length k >= 3 avoided, m >= 0 gadget merges."""

    k: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise ValueError(f"cycle length must be >= 3, got {self.k}")
        if self.m < 0:
            raise ValueError(f"merge count must be >= 0, got {self.m}")

    @property
    def vertex_count(self) -> int:
        return (self.k - 1) + self.m * (self.k * self.k - 2 * self.k - 1)

    @property
    def edge_count(self) -> int:
        return (2 * self.k - 5) * (1 + self.m * self.k)


def fan_graph(p: int) -> Graph:
    """Cycle 0..p-1 with chords from vertex 0 to 2..p-2; e = 2p-3."""
    if p < 2:
        raise ValueError(f"fan needs at least 2 vertices, got {p}")
    if p == 2:
        return make_graph(2, [(0, 1)])
    edges = [(i, i + 1) for i in range(p - 1)] + [(0, p - 1)]
    edges += [(0, j) for j in range(2, p - 1)]
    return make_graph(p, edges)


def fan(p: int) -> OuterplaneEmbedding:
    return recognize_outerplanar(fan_graph(p))


def build_G0(k: int) -> OuterplaneEmbedding:
    """Seed of the chain: an edge-maximal graph on k-1 vertices, 2k-5 edges."""
    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    return fan(k - 1)


def gadget_distinguished_edge(k: int) -> Edge:
    """The free face edge of the gadget, under its deterministic numbering."""
    return (0, k)


def _gadget_graph(k: int) -> tuple[Graph, Edge, Edge]:
    """Gadget graph plus (distinguished edge, designated far boundary edge).

    Face vertices are 0..k; face edges (i, i+1) each receive a fan copy with
    apex at i, fresh vertices numbered consecutively from k+1; the edge
    (0, k) stays free. The far edge sits on the fan attached to face edge
    floor(k/2) and is where the next chain merge attaches.
    """
    p = k - 1  # fan size
    edges: list[Edge] = [(i, i + 1) for i in range(k)] + [(0, k)]
    far: Edge | None = (k // 2, k // 2 + 1) if p == 2 else None
    fresh = k + 1
    for i in range(k):
        # glue fan(p): local 0 -> i, local 1 -> i+1, locals 2..p-1 fresh
        local = [i, i + 1] + list(range(fresh, fresh + p - 2))
        fresh += p - 2
        for a in range(1, p - 1):
            edges.append(edge_key(local[a], local[a + 1]))
        if p >= 3:
            edges.append(edge_key(local[0], local[p - 1]))
        for j in range(2, p - 1):
            edges.append(edge_key(local[0], local[j]))
        if i == k // 2 and p >= 3:
            far = edge_key(local[1], local[2])
    g = make_graph(fresh, sorted(set(edges)))
    assert g.e == len(edges), "gadget edge lists must not overlap"
    assert far is not None
    return g, (0, k), far


def build_H(k: int) -> OuterplaneEmbedding:
    """The merge gadget: k^2-2k+1 vertices, 2k^2-5k+1 edges, no k-cycle.

    Its distinguished outer edge is gadget_distinguished_edge(k) = (0, k).
    """
    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    g, _, _ = _gadget_graph(k)
    return recognize_outerplanar(g)


def build_chain_graph(k: int, m: int) -> Graph:
    params = ChainParams(k, m)
    g = fan_graph(k - 1)
    # boundary edge the next gadget merges onto
    attach: Edge = (0, 1)
    for _ in range(m):
        h, uv, far = _gadget_graph(k)
        a, b = attach
        u, v = uv
        rename: dict[int, int] = {u: a, v: b}
        nxt = g.n
        for w in range(h.n):
            if w not in rename:
                rename[w] = nxt
                nxt += 1
        merged = set(g.edges)
        for x, y in h.edges:
            merged.add(edge_key(rename[x], rename[y]))
        g = make_graph(nxt, sorted(merged))
        attach = edge_key(rename[far[0]], rename[far[1]])
    assert g.n == params.vertex_count and g.e == params.edge_count
    return g


def build_chain(k: int, m: int) -> OuterplaneEmbedding:
    """Chain of m gadget merges; meets the upper bound with equality."""
    return recognize_outerplanar(build_chain_graph(k, m))
