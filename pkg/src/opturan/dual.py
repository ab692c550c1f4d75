"""Weak dual forests, triangular blocks, and the reducible-face finder.

The weak dual has one node per inner face, with faces adjacent when they
share an edge; for outerplane embeddings it is always a forest. Triangular
blocks partition the edge set: maximal unions of edge-adjacent triangular
faces, plus one trivial (single-edge) block for every edge that borders no
triangular face. A block is terminal when it shares edges with at most one
inner face of size >= 4.

The reducible-face finder returns an inner face of size L >= 4 for which at
least L-1 of the blocks carrying its edges are terminal. One always exists
when any (4+)-face does: in the bipartite face/block incidence forest,
deleting terminal block nodes leaves every surviving block node with degree
>= 2, so some (4+)-face node has at most one surviving neighbour.
"""

from __future__ import annotations

import dataclasses
from collections import defaultdict
from dataclasses import dataclass

from .graph import Edge
from .embedding import (
    EmbeddingInvariantError,
    Face,
    OuterplaneEmbedding,
    inner_faces,
)


@dataclass(frozen=True)
class WeakDualForest:
    """Faces plus adjacency between faces sharing an edge.

    `edges` holds index pairs into `faces`; `shared_edges` records, for each
    dual edge, the graph edge the two faces share.
    """

    faces: tuple[Face, ...]
    edges: tuple[tuple[int, int], ...]
    shared_edges: tuple[Edge, ...]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.faces]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


@dataclass(frozen=True)
class TriangularBlock:
    edges: tuple[Edge, ...]
    vertices: tuple[int, ...]
    trivial: bool
    terminal: bool | None = None


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[TriangularBlock, ...]

    def block_of_edge(self) -> dict[Edge, int]:
        owner: dict[Edge, int] = {}
        for bi, block in enumerate(self.blocks):
            for e in block.edges:
                if e in owner:
                    raise EmbeddingInvariantError(f"edge {e} owned by two blocks")
                owner[e] = bi
        return owner


@dataclass(frozen=True)
class FaceBlockIncidence:
    """Bipartite incidence between (4+)-faces and triangular blocks."""

    faces: tuple[Face, ...]
    blocks: tuple[TriangularBlock, ...]
    edges: tuple[tuple[int, int], ...]  # (face index, block index)


def _assert_forest(node_count: int, edges: list[tuple[int, int]], what: str) -> None:
    parent = list(range(node_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            raise EmbeddingInvariantError(f"{what} contains a cycle")
        parent[ra] = rb


def weak_dual(emb: OuterplaneEmbedding) -> WeakDualForest:
    """Face-adjacency forest of the embedding (a tree per 2-connected block)."""
    faces = tuple(inner_faces(emb))
    by_edge: dict[Edge, list[int]] = defaultdict(list)
    for fi, face in enumerate(faces):
        for e in face.boundary_edges():
            by_edge[e].append(fi)
    dual_edges: list[tuple[int, int]] = []
    shared: list[Edge] = []
    for e, users in sorted(by_edge.items()):
        if len(users) == 2:
            a, b = sorted(users)
            dual_edges.append((a, b))
            shared.append(e)
        elif len(users) > 2:
            raise EmbeddingInvariantError(f"edge {e} borders {len(users)} inner faces")
    if len(dual_edges) != len(set(dual_edges)):
        raise EmbeddingInvariantError("weak dual has a double edge")
    _assert_forest(len(faces), dual_edges, "weak dual")
    return WeakDualForest(faces=faces, edges=tuple(dual_edges), shared_edges=tuple(shared))


def triangular_blocks(emb: OuterplaneEmbedding) -> BlockPartition:
    """Partition of the edge set into triangular blocks.

    Non-trivial blocks are unions of triangle faces over connected components
    of the triangles-only part of the weak dual; every edge bordering no
    triangle becomes its own trivial block.
    """
    dual = weak_dual(emb)
    tri = [fi for fi, f in enumerate(dual.faces) if f.size == 3]
    tri_set = set(tri)
    parent = {fi: fi for fi in tri}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, b), shared in zip(dual.edges, dual.shared_edges):
        if a in tri_set and b in tri_set:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = defaultdict(list)
    for fi in tri:
        groups[find(fi)].append(fi)

    blocks: list[TriangularBlock] = []
    covered: set[Edge] = set()
    for members in groups.values():
        edges: set[Edge] = set()
        for fi in members:
            edges.update(dual.faces[fi].boundary_edges())
        verts = tuple(sorted({v for e in edges for v in e}))
        blocks.append(
            TriangularBlock(edges=tuple(sorted(edges)), vertices=verts, trivial=False)
        )
        covered.update(edges)
    for e in emb.graph.edges:
        if e not in covered:
            blocks.append(TriangularBlock(edges=(e,), vertices=e, trivial=True))
    blocks.sort(key=lambda b: b.edges)
    partition = BlockPartition(tuple(blocks))
    owner = partition.block_of_edge()
    if set(owner) != emb.graph.edge_set():
        raise EmbeddingInvariantError("triangular blocks do not cover the edge set")
    return partition


def classify_terminal(
    partition: BlockPartition, emb: OuterplaneEmbedding
) -> BlockPartition:
    """Set each block's terminal flag: shares edges with <= 1 face of size >= 4."""
    owner = partition.block_of_edge()
    touched: dict[int, set[int]] = defaultdict(set)
    for fi, face in enumerate(inner_faces(emb)):
        if face.size < 4:
            continue
        for e in face.boundary_edges():
            touched[owner[e]].add(fi)
    blocks = tuple(
        dataclasses.replace(block, terminal=len(touched.get(bi, ())) <= 1)
        for bi, block in enumerate(partition.blocks)
    )
    return BlockPartition(blocks)


def face_block_incidence(emb: OuterplaneEmbedding) -> FaceBlockIncidence:
    """The bipartite (4+)-face / block incidence graph; always a forest."""
    partition = classify_terminal(triangular_blocks(emb), emb)
    owner = partition.block_of_edge()
    big_faces = [f for f in inner_faces(emb) if f.size >= 4]
    pairs: set[tuple[int, int]] = set()
    for fi, face in enumerate(big_faces):
        for e in face.boundary_edges():
            pairs.add((fi, owner[e]))
    edges = sorted(pairs)
    offset = len(big_faces)
    _assert_forest(
        offset + len(partition.blocks),
        [(fi, offset + bi) for fi, bi in edges],
        "face/block incidence",
    )
    return FaceBlockIncidence(
        faces=tuple(big_faces), blocks=partition.blocks, edges=tuple(edges)
    )


def find_reducible_face(
    emb: OuterplaneEmbedding,
) -> tuple[Face, tuple[TriangularBlock, ...]] | None:
    """A (4+)-inner-face whose surrounding blocks are terminal up to one.

    Returns (face, terminal blocks around it), or None when every inner face
    is a triangle. Among qualifying faces the lexicographically least
    boundary wins, for reproducible output.
    """
    inc = face_block_incidence(emb)
    if not inc.faces:
        return None
    non_terminal_deg = [0] * len(inc.faces)
    incident: dict[int, list[int]] = defaultdict(list)
    for fi, bi in inc.edges:
        incident[fi].append(bi)
        if not inc.blocks[bi].terminal:
            non_terminal_deg[fi] += 1
    qualifying = [fi for fi in range(len(inc.faces)) if non_terminal_deg[fi] <= 1]
    if not qualifying:
        raise EmbeddingInvariantError(
            "no reducible face despite a (4+)-face being present"
        )
    chosen = min(qualifying, key=lambda fi: inc.faces[fi].vertices)
    terminal = tuple(
        sorted(
            (inc.blocks[bi] for bi in incident[chosen] if inc.blocks[bi].terminal),
            key=lambda b: b.edges,
        )
    )
    return inc.faces[chosen], terminal


# ---------------------------------------------------------------------------
# DOT exports for documentation figures
# ---------------------------------------------------------------------------


def weak_dual_to_dot(dual: WeakDualForest, name: str = "WeakDual") -> str:
    lines = [f"graph {name} {{"]
    for fi, face in enumerate(dual.faces):
        label = "-".join(map(str, face.vertices))
        lines.append(f'  f{fi} [label="{label}"];')
    for (a, b), shared in zip(dual.edges, dual.shared_edges):
        lines.append(f'  f{a} -- f{b} [label="{shared[0]}-{shared[1]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def incidence_to_dot(inc: FaceBlockIncidence, name: str = "Incidence") -> str:
    lines = [f"graph {name} {{"]
    for fi, face in enumerate(inc.faces):
        label = "-".join(map(str, face.vertices))
        lines.append(f'  f{fi} [shape=box, label="face {label}"];')
    for bi, block in enumerate(inc.blocks):
        kind = "trivial" if block.trivial else "block"
        flag = "?" if block.terminal is None else ("T" if block.terminal else "N")
        label = f"{kind} {','.join(map(str, block.vertices))} [{flag}]"
        lines.append(f'  b{bi} [label="{label}"];')
    for fi, bi in inc.edges:
        lines.append(f"  f{fi} -- b{bi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
