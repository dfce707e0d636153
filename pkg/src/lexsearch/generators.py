"""Random graph families used by the test suite and the benchmark."""

from __future__ import annotations

import random

import numpy as np

from .graph import Graph, build_graph, graph_from_arrays, is_connected


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def unit_interval_bigraph(n: int, rng: random.Random, span: float | None = None) -> Graph:
    """Random bigraph from unit intervals, hence a proper interval bigraph.

    Each vertex gets a side and a unit interval with a uniform left end in
    ``[0, span]``; opposite-side vertices are adjacent iff their intervals
    meet.
    """
    if span is None:
        span = rng.uniform(0.5, n / 2.5)
    side = [rng.random() < 0.5 for _ in range(n)]
    left = [rng.uniform(0.0, span) for _ in range(n)]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if side[u] != side[v] and abs(left[u] - left[v]) <= 1.0]
    return build_graph(n, edges)


def connected_unit_interval_bigraph(n: int, rng: random.Random, tries: int = 1000) -> Graph:
    for _ in range(tries):
        g = unit_interval_bigraph(n, rng)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected sample after {tries} tries")


def chordal_graph(n: int, rng: random.Random) -> Graph:
    """Chordal graph by simplicial accretion.

    Every new vertex is joined to a clique of the current graph, so it is
    simplicial on arrival and the insertion order reversed is a perfect
    elimination ordering.
    """
    adj: list[set[int]] = [set()]
    for v in range(1, n):
        u = rng.randrange(v)
        clique = [u]
        if rng.random() < 0.9:
            for w in rng.sample(sorted(adj[u]), len(adj[u])):
                if rng.random() < 0.6 and all(w in adj[c] for c in clique):
                    clique.append(w)
        else:
            clique = []
        adj.append(set(clique))
        for c in clique:
            adj[c].add(v)
    # shuffle ids so that id order carries no elimination information
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[w]) for u in range(n) for w in adj[u] if u < w]
    return build_graph(n, edges)


def random_bipartite(n: int, m: int, seed: int) -> Graph:
    """``n`` vertices split in halves and exactly ``m`` distinct random cross edges."""
    half = n // 2
    if m > half * (n - half):
        raise ValueError(f"{m} edges do not fit between sides of {half} and {n - half}")
    rng = np.random.default_rng(seed)
    codes = np.empty(0, dtype=np.int64)
    while codes.size < m:
        extra = rng.integers(0, half * (n - half), m - codes.size + 16, dtype=np.int64)
        codes = np.unique(np.concatenate([codes, extra]))
    codes = rng.permutation(codes)[:m]
    return graph_from_arrays(n, codes // (n - half), half + codes % (n - half))
