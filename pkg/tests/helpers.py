"""Independent reference checks used across the test suite.

Nothing here uses the slice machinery or the component-partition shortcut
of the library; paths are checked with networkx and LBFS labels are built
explicitly.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from pathlib import Path

import networkx as nx

from lexsearch.generators import connected_unit_interval_bigraph
from lexsearch.graph import Graph, build_graph
from lexsearch.graphio import read_graph

FIXTURES = Path(__file__).parent / "fixtures"


def fixture(name: str) -> Graph:
    return read_graph(FIXTURES / f"{name}.txt")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return build_graph(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def is_lbfs_by_labels(g: Graph, sigma) -> bool:
    """Label-based LBFS check: each step picks a vertex of lexicographically largest label.

    A label is the list of ``n - i`` for visited neighbours ``sigma[i]`` in
    visit order, so earlier visits weigh more.
    """
    n = g.vertex_count
    labels = {v: [] for v in g.vertices}
    visited = set()
    for i, v in enumerate(sigma):
        best = max(labels[u] for u in g.vertices if u not in visited)
        if labels[v] != best:
            return False
        visited.add(v)
        for u in g.neighbors(v):
            if u not in visited:
                labels[u].append(n - i)
    return True


def brute_lbfs_orderings(g: Graph) -> set[tuple[int, ...]]:
    return {p for p in itertools.permutations(g.vertices) if is_lbfs_by_labels(g, p)}


def misses_path_exists(h: nx.Graph, a: int, b: int, missed: int) -> bool:
    """Is there an (a, b)-path avoiding N[missed]? Checked on the deleted subgraph."""
    blocked = set(h[missed]) | {missed}
    if a in blocked or b in blocked:
        return False
    return nx.has_path(h.subgraph(set(h) - blocked), a, b)


def brute_at_free(g: Graph) -> bool:
    h = to_nx(g)
    for a, b, c in itertools.combinations(g.vertices, 3):
        if h.has_edge(a, b) or h.has_edge(a, c) or h.has_edge(b, c):
            continue
        if (misses_path_exists(h, a, b, c) and misses_path_exists(h, a, c, b)
                and misses_path_exists(h, b, c, a)):
            return False
    return True


def brute_admissible(g: Graph, z: int) -> bool:
    h = to_nx(g)
    for x, y in itertools.combinations([v for v in g.vertices if v != z], 2):
        if misses_path_exists(h, x, z, y) and misses_path_exists(h, y, z, x):
            return False
    return True


def is_perfect_elimination_prefix_order(g: Graph, sigma) -> bool:
    """Every vertex's earlier neighbours in ``sigma`` form a clique."""
    pos = {v: i for i, v in enumerate(sigma)}
    for v in sigma:
        earlier = [u for u in g.neighbors(v) if pos[u] < pos[v]]
        for a, b in itertools.combinations(earlier, 2):
            if not g.has_edge(a, b):
                return False
    return True


def comparability_violations(g: Graph) -> list:
    """Neighbourhood comparability inside components of G - N[z], by layer."""
    from lexsearch.graph import bfs_layers, components_minus_closed_neighborhood

    bad = []
    for z in g.vertices:
        ls = bfs_layers(g, z)
        part = components_minus_closed_neighborhood(g, z)
        for comp in part.components:
            for level in range(2, len(ls.layers)):
                members = sorted(comp & ls.layers[level])
                for a, b in itertools.combinations(members, 2):
                    da, db = ls.neighbors_in_layer(g, a, level - 1), ls.neighbors_in_layer(g, b, level - 1)
                    ua, ub = ls.neighbors_in_layer(g, a, level + 1), ls.neighbors_in_layer(g, b, level + 1)
                    ok1 = da <= db or db <= da
                    ok2 = ua <= ub or ub <= ua
                    ok3 = (da <= db) == (ua >= ub) and (db <= da) == (ub >= ua)
                    if not (ok1 and ok2 and ok3):
                        bad.append((z, level, a, b))
    return bad


@lru_cache(maxsize=None)
def atlas_graphs(max_n: int) -> tuple[Graph, ...]:
    """All graphs on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= max_n)


@lru_cache(maxsize=None)
def small_atfree_bigraphs() -> tuple[Graph, ...]:
    """Every connected AT-free bigraph on at most 7 vertices, up to isomorphism."""
    out = []
    for g in atlas_graphs(7):
        h = to_nx(g)
        if nx.is_connected(h) and nx.is_bipartite(h) and brute_at_free(g):
            out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def small_atfree_graphs() -> tuple[Graph, ...]:
    """Every connected AT-free graph on at most 7 vertices (bipartite or not)."""
    return tuple(g for g in atlas_graphs(7) if nx.is_connected(to_nx(g)) and brute_at_free(g))


@lru_cache(maxsize=None)
def random_atfree_bigraphs(count: int = 1000, seed: int = 20240611) -> tuple[Graph, ...]:
    rng = random.Random(seed)
    return tuple(connected_unit_interval_bigraph(rng.randint(8, 12), rng) for _ in range(count))
