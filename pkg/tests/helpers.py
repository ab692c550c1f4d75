"""Shared brute-force oracles and deterministic random generators.

Everything here is intentionally naive: permutation search for
outerplanarity, unpruned path extension for cycles, full subset sweeps for
extremal values. These are the independent references the fast production
paths are checked against.
"""

from __future__ import annotations

import itertools
import random

import opturan as op
from opturan.embedding import NotOuterplanarError
from opturan.graph import find_cycle_in_edges


def brute_outerplanar(g: op.Graph) -> bool:
    """Outerplanarity by trying every boundary order of every block."""
    dec = op.biconnected_decomposition(g)
    for blk in dec.blocks:
        verts = list(blk.vertices)
        edges = set(blk.edges)
        p = len(verts)
        ok = False
        for perm in itertools.permutations(verts[1:]):
            order = [verts[0]] + list(perm)
            if any(
                op.edge_key(order[i], order[(i + 1) % p]) not in edges
                for i in range(p)
            ):
                continue
            pos = {v: i for i, v in enumerate(order)}
            boundary = {
                op.edge_key(order[i], order[(i + 1) % p]) for i in range(p)
            }
            chords = [
                tuple(sorted((pos[u], pos[v]))) for u, v in edges - boundary
            ]
            if not any(
                a < c < b < d for a, b in chords for c, d in chords
            ):
                ok = True
                break
        if not ok:
            return False
    return True


def recognizes(g: op.Graph) -> bool:
    try:
        op.recognize_outerplanar(g)
        return True
    except NotOuterplanarError:
        return False


def brute_cycle_lengths(g: op.Graph) -> set[int]:
    """Every simple cycle length, by unpruned path extension."""
    adj = g.adjacency()
    lengths: set[int] = set()

    def walk(start: int, path: list[int], on: set[int]) -> None:
        v = path[-1]
        for w in adj[v]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                lengths.add(len(path))
            if w > start and w not in on:
                on.add(w)
                path.append(w)
                walk(start, path, on)
                path.pop()
                on.discard(w)

    for s in range(g.n):
        walk(s, [s], {s})
    return lengths


def all_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield op.make_graph(
            n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        )


def rand_triangulation_chords(rng: random.Random, n: int) -> list[tuple[int, int]]:
    chords: list[tuple[int, int]] = []

    def split(i: int, j: int) -> None:
        if j - i == 1:
            return
        m = rng.randint(i + 1, j - 1)
        if m - i > 1:
            chords.append((i, m))
        if j - m > 1:
            chords.append((m, j))
        split(i, m)
        split(m, j)

    split(0, n - 1)
    return chords


def rand_triangulation(rng: random.Random, n: int) -> op.OuterplaneEmbedding:
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    edges += rand_triangulation_chords(rng, n)
    return op.recognize_outerplanar(op.make_graph(n, edges))


def rand_subgraph(rng: random.Random, g: op.Graph, keep: float) -> op.Graph:
    edges = [e for e in g.edges if rng.random() < keep]
    return op.make_graph(g.n, edges)


def rand_ckfree_subgraph(rng: random.Random, n: int, k: int) -> op.Graph:
    """Random subgraph of a random triangulation with all k-cycles destroyed."""
    g = rand_subgraph(rng, rand_triangulation(rng, n).graph, keep=0.85)
    edges = list(g.edges)
    while True:
        cyc = op.find_cycle_of_length(op.make_graph(n, edges), k)
        if cyc is None:
            return op.make_graph(n, edges)
        kill = op.edge_key(*rng.choice([(cyc[i], cyc[(i + 1) % k]) for i in range(k)]))
        edges = [e for e in edges if e != kill]


def brute_max_ckfree(n: int, k: int) -> int:
    """Max edges over every subset of every triangulation. Tiny n only."""
    if n == 2:
        return 1
    best = 0
    for t in op.triangulations(n):
        edges = t.graph.edges
        for mask in range(1 << len(edges)):
            chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
            if len(chosen) <= best:
                continue
            if find_cycle_in_edges(n, chosen, k) is None:
                best = len(chosen)
    return best
