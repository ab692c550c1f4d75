"""Exact maximum edge counts by exhaustive sweep at desk scale.

Every n-vertex outerplanar graph is a subgraph of some edge-maximal one on
the same vertex set, i.e. of a triangulation of the convex n-gon. So the
maximum edge count of an outerplanar graph with no k-cycle is the maximum,
over all Catalan(n-2) triangulations, of the largest k-cycle-free edge
subset of that triangulation. The inner maximisation is branch-and-bound:
find one k-cycle, branch on deleting each of its edges, prune by the best
count so far, and de-duplicate revisited edge subsets.

The sweep is deterministic: triangulations stream in a fixed recursive
order, branching always deletes cycle edges smallest-first, and parallel
runs merge per-triangulation results by (value, enumeration index), so the
reported value and witness do not depend on worker count or completion
order. An optional symmetry filter keeps one triangulation per
rotation/reflection class of the polygon, which changes nothing about the
maximum value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .graph import Edge, Graph, edge_key, find_cycle_in_edges, make_graph
from .embedding import BlockEmbedding, OuterplaneEmbedding, is_edge_maximal
from .turan import upper_bound

DEFAULT_ORACLE_CAP = 11
SYMMETRY_AUTO_THRESHOLD = 10

_CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def catalan(i: int) -> int:
    while len(_CATALAN) <= i:
        c = sum(_CATALAN[j] * _CATALAN[len(_CATALAN) - 1 - j] for j in range(len(_CATALAN)))
        _CATALAN.append(c)
    return _CATALAN[i]


class OracleCapError(RuntimeError):
    """Refusal to run an exhaustive sweep above the configured cap."""


def _chord_sets(i: int, j: int) -> Iterator[frozenset[Edge]]:
    """All chord sets triangulating the polygon arc i..j closed by edge (i, j)."""
    if j == i + 1:
        yield frozenset()
        return
    for mid in range(i + 1, j):
        extra = set()
        if mid - i > 1:
            extra.add((i, mid))
        if j - mid > 1:
            extra.add((mid, j))
        for left in _chord_sets(i, mid):
            for right in _chord_sets(mid, j):
                yield frozenset(left | right | extra)


def _triangulation_embedding(n: int, chords: frozenset[Edge]) -> OuterplaneEmbedding:
    cycle = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    graph = make_graph(n, cycle + sorted(chords))
    block = BlockEmbedding(outer=tuple(range(n)), chords=tuple(sorted(chords)))
    return OuterplaneEmbedding(graph=graph, blocks=(block,), bridges=(), isolated=())


def triangulations(n: int, symmetry: bool = False) -> Iterator[OuterplaneEmbedding]:
    """All triangulations of the convex n-gon, exactly Catalan(n-2) of them.

    Vertex i sits at polygon position i, so chord position pairs equal chord
    vertex pairs. With symmetry=True only the canonical representative of
    each rotation/reflection class is produced.
    """
    if n < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got {n}")
    for chords in _chord_sets(0, n - 1):
        if symmetry and _dihedral_canonical(n, chords) != tuple(sorted(chords)):
            continue
        yield _triangulation_embedding(n, chords)


def _dihedral_canonical(n: int, chords: frozenset[Edge]) -> tuple[Edge, ...]:
    best: tuple[Edge, ...] | None = None
    for reflect in (False, True):
        for shift in range(n):
            mapped = tuple(
                sorted(
                    edge_key(
                        ((-u if reflect else u) + shift) % n,
                        ((-v if reflect else v) + shift) % n,
                    )
                    for u, v in chords
                )
            )
            if best is None or mapped < best:
                best = mapped
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# Branch and bound over edge subsets of one triangulation
# ---------------------------------------------------------------------------


def _max_ckfree_in_edges(
    n: int, edges: tuple[Edge, ...], k: int
) -> tuple[int, tuple[Edge, ...]]:
    best_count = -1
    best_edges: tuple[Edge, ...] = ()
    seen: set[frozenset[Edge]] = set()
    stack: list[frozenset[Edge]] = [frozenset(edges)]
    while stack:
        current = stack.pop()
        if len(current) <= best_count or current in seen:
            continue
        seen.add(current)
        cycle = find_cycle_in_edges(n, sorted(current), k)
        if cycle is None:
            best_count = len(current)
            best_edges = tuple(sorted(current))
            continue
        cycle_edges = sorted(
            edge_key(cycle[i], cycle[(i + 1) % k]) for i in range(k)
        )
        # LIFO stack: push in reverse so the smallest edge is removed first
        for e in reversed(cycle_edges):
            stack.append(current - {e})
    return best_count, best_edges


def max_ckfree_edges(
    t: OuterplaneEmbedding, k: int
) -> tuple[int, tuple[Edge, ...]]:
    """Largest k-cycle-free edge subset of a triangulation, with witness."""
    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    if not is_edge_maximal(t):
        raise ValueError("branch-and-bound host must be edge-maximal")
    return _max_ckfree_in_edges(t.graph.n, t.graph.edges, k)


# ---------------------------------------------------------------------------
# Full sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    n: int
    k: int
    value: int
    witness: Graph
    triangulations_scanned: int
    elapsed: float


def _sweep_one(args: tuple[int, int, tuple[Edge, ...]]) -> tuple[int, tuple[Edge, ...]]:
    n, k, edges = args
    return _max_ckfree_in_edges(n, edges, k)


def exact_ex(
    n: int,
    k: int,
    *,
    cap: int = DEFAULT_ORACLE_CAP,
    symmetry: bool | None = None,
    jobs: int = 1,
) -> OracleResult:
    """Exact maximum edges of an n-vertex outerplanar graph with no k-cycle.

    symmetry=None resolves to True for n >= 10 (auditable full enumeration
    below that). Raises OracleCapError above `cap` with a cost estimate.
    """
    if n < 2:
        raise ValueError(f"vertex count must be >= 2, got {n}")
    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    if jobs < 1:
        raise ValueError(f"worker count must be >= 1, got {jobs}")
    if n > cap:
        count = catalan(n - 2)
        raise OracleCapError(
            f"n={n} exceeds the sweep cap {cap}: {count} triangulations x "
            f"branch-and-bound over up to 2^{2 * n - 3} subsets each; "
            "raise the cap explicitly to proceed"
        )
    started = time.monotonic()
    if n == 2:
        return OracleResult(
            n=2,
            k=k,
            value=1,
            witness=make_graph(2, [(0, 1)]),
            triangulations_scanned=0,
            elapsed=time.monotonic() - started,
        )
    if symmetry is None:
        symmetry = n >= SYMMETRY_AUTO_THRESHOLD
    full = 2 * n - 3
    tasks = ((n, k, t.graph.edges) for t in triangulations(n, symmetry=symmetry))
    best_value = -1
    best_edges: tuple[Edge, ...] = ()
    scanned = 0
    if jobs == 1:
        for task in tasks:
            value, edges = _sweep_one(task)
            scanned += 1
            if value > best_value:
                best_value, best_edges = value, edges
            if best_value == full:
                break  # a full triangulation is k-cycle-free; nothing beats 2n-3
    else:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            for value, edges in pool.imap(_sweep_one, tasks, chunksize=8):
                scanned += 1
                if value > best_value:
                    best_value, best_edges = value, edges
    witness = make_graph(n, best_edges)
    result = OracleResult(
        n=n,
        k=k,
        value=best_value,
        witness=witness,
        triangulations_scanned=scanned,
        elapsed=time.monotonic() - started,
    )
    check = upper_bound(k, n)
    assert best_value * check.denominator <= check.numerator, (
        "sweep exceeded the certified upper bound; this is a bug"
    )
    return result
