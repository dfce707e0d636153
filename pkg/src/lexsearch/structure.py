"""Asteroidal triples, unrelated pairs, admissible vertices, dominating pairs.

A path *misses* ``v`` when it avoids the closed neighbourhood ``N[v]``. Every
predicate here reduces a question about such paths to component membership
in ``G - N[v]``: an (a, b)-path missing ``v`` exists iff ``a`` and ``b`` lie
in one component of ``G - N[v]``. Witness paths are shortest paths inside
that component.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import DisconnectedGraphError, GraphInputError
from .graph import Graph, all_closed_neighborhood_partitions, bipartition, is_connected

__all__ = [
    "ATWitness",
    "UnrelatedWitness",
    "find_asteroidal_triple",
    "is_at_free",
    "is_unrelated_pair",
    "is_admissible",
    "admissible_vertices",
    "is_dominating_pair",
    "is_proper_interval_bigraph",
]


@dataclass(frozen=True)
class ATWitness:
    """Triple ``(a, b, c)``; ``paths[i]`` joins the two vertices other than ``triple[i]`` and misses it."""

    triple: tuple[int, int, int]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def to_json(self) -> dict:
        return {"triple": list(self.triple), "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class UnrelatedWitness:
    """``x, y`` unrelated w.r.t. ``z``: ``path_xz`` misses ``y``, ``path_yz`` misses ``x``."""

    x: int
    y: int
    z: int
    path_xz: tuple[int, ...]
    path_yz: tuple[int, ...]

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "z": self.z,
                "path_xz": list(self.path_xz), "path_yz": list(self.path_yz)}


def avoiding_path(g: Graph, src: int, dst: int, missed: int) -> tuple[int, ...] | None:
    """Shortest ``(src, dst)``-path avoiding ``N[missed]``, or ``None``."""
    blocked = g.closed_neighbors(missed)
    if src in blocked or dst in blocked:
        return None
    parent = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while path[-1] != src:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        for w in sorted(g.neighbors(u)):
            if w not in blocked and w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def find_asteroidal_triple(g: Graph) -> ATWitness | None:
    """First asteroidal triple in lexicographic order, or ``None`` if AT-free."""
    parts = all_closed_neighborhood_partitions(g)
    n = g.vertex_count
    for a in range(n):
        na = g.neighbors(a)
        for b in range(a + 1, n):
            if b in na:
                continue
            nb = g.neighbors(b)
            for c in range(b + 1, n):
                if c in na or c in nb:
                    continue
                if (parts[c].same_component(a, b)
                        and parts[b].same_component(a, c)
                        and parts[a].same_component(b, c)):
                    paths = (
                        avoiding_path(g, b, c, a),
                        avoiding_path(g, a, c, b),
                        avoiding_path(g, a, b, c),
                    )
                    return ATWitness((a, b, c), paths)
    return None


def is_at_free(g: Graph) -> bool:
    return find_asteroidal_triple(g) is None


def _check_distinct(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.vertex_count:
            raise GraphInputError(f"vertex {v} out of range for {g.vertex_count} vertices")
    if len(set(vs)) != len(vs):
        raise GraphInputError(f"vertices must be distinct, got {vs}")


def is_unrelated_pair(g: Graph, x: int, y: int, z: int) -> UnrelatedWitness | None:
    """Witness that ``x, y`` are unrelated with respect to ``z``, else ``None``."""
    _check_distinct(g, x, y, z)
    parts = all_closed_neighborhood_partitions(g)
    if not (parts[y].same_component(x, z) and parts[x].same_component(y, z)):
        return None
    return UnrelatedWitness(x, y, z, avoiding_path(g, x, z, y), avoiding_path(g, y, z, x))


def is_admissible(g: Graph, z: int) -> tuple[bool, UnrelatedWitness | None]:
    """``(True, None)`` if no pair is unrelated w.r.t. ``z``; else ``(False, witness)``.

    The witness is the lexicographically first unrelated pair ``x < y``.
    """
    if not 0 <= z < g.vertex_count:
        raise GraphInputError(f"vertex {z} out of range for {g.vertex_count} vertices")
    parts = all_closed_neighborhood_partitions(g)
    others = [v for v in g.vertices if v != z]
    for x, y in combinations(others, 2):
        if parts[y].same_component(x, z) and parts[x].same_component(y, z):
            return False, is_unrelated_pair(g, x, y, z)
    return True, None


def admissible_vertices(g: Graph) -> frozenset[int]:
    return frozenset(z for z in g.vertices if is_admissible(g, z)[0])


def is_dominating_pair(g: Graph, x: int, y: int) -> tuple[bool, int | None]:
    """Whether every (x, y)-path dominates ``g``.

    Returns ``(False, v)`` with the least vertex ``v`` missed by some
    (x, y)-path, or ``(True, None)``.
    """
    _check_distinct(g, x, y)
    if not is_connected(g):
        raise DisconnectedGraphError()
    parts = all_closed_neighborhood_partitions(g)
    for v in g.vertices:
        if parts[v].same_component(x, y):
            return False, v
    return True, None


def is_proper_interval_bigraph(g: Graph) -> bool:
    """Bipartite and AT-free, which is the same class as proper interval bigraphs."""
    return bipartition(g) is not None and find_asteroidal_triple(g) is None
