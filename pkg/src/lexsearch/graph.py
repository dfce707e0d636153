"""Immutable simple graphs plus the metric and neighbourhood primitives.

Vertices are dense integers ``0..n-1``; optional string names live in a side
table and only matter for gadget landmarks and I/O.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DisconnectedGraphError, GraphInputError

__all__ = [
    "Graph",
    "LayerStructure",
    "ComponentPartition",
    "build_graph",
    "graph_from_arrays",
    "bipartition",
    "find_odd_cycle",
    "is_connected",
    "bfs_layers",
    "eccentricity",
    "diameter",
    "eccentric_vertices",
    "components_minus_closed_neighborhood",
    "deep_components",
    "all_closed_neighborhood_partitions",
]


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; build them with :func:`build_graph`. Equality
    compares structure only, names are ignored.
    """

    def __init__(self, adjacency: Sequence[frozenset[int]], names: Mapping[int, str] | None = None):
        self._adj = tuple(adjacency)
        self._names = dict(names) if names else {}

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def vertices(self) -> range:
        return range(len(self._adj))

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in self.vertices for v in sorted(self._adj[u]) if u < v]

    @property
    def names(self) -> dict[int, str]:
        return dict(self._names)

    def name(self, v: int) -> str:
        return self._names.get(v, str(v))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: v for v, name in self._names.items()}

    def vertex(self, label: str | int) -> int:
        """Resolve a vertex name (or a decimal id) to its id."""
        if isinstance(label, (int, np.integer)):
            v = int(label)
        elif label in self._index:
            return self._index[label]
        else:
            try:
                v = int(label)
            except ValueError:
                raise GraphInputError(f"unknown vertex {label!r}") from None
        if not 0 <= v < self.vertex_count:
            raise GraphInputError(f"vertex {v} out of range for {self.vertex_count} vertices")
        return v

    def with_names(self, names: Mapping[int, str]) -> Graph:
        return Graph(self._adj, names)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks, for the small-graph oracles."""
        out = []
        for nb in self._adj:
            m = 0
            for u in nb:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` with every row sorted ascending."""
        degrees = np.fromiter((len(nb) for nb in self._adj), dtype=np.int64, count=len(self._adj))
        indptr = np.zeros(len(self._adj) + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        indices = np.empty(int(indptr[-1]), dtype=np.int32)
        for v, nb in enumerate(self._adj):
            if nb:
                indices[indptr[v]:indptr[v + 1]] = sorted(nb)
        return indptr, indices

    def induced_subgraph(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Return the induced subgraph and the list mapping new ids to old ids."""
        old = sorted(set(keep))
        new_of = {v: i for i, v in enumerate(old)}
        adj = [frozenset(new_of[u] for u in self._adj[v] if u in new_of) for v in old]
        names = {new_of[v]: n for v, n in self._names.items() if v in new_of}
        return Graph(adj, names), old

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int]], names: Mapping[int, str] | None = None) -> Graph:
    """Build a :class:`Graph`, collapsing duplicate edges.

    Raises :class:`GraphInputError` on an out-of-range endpoint or a loop.
    """
    if vertex_count < 0:
        raise GraphInputError(f"negative vertex count {vertex_count}")
    adj: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise GraphInputError(f"edge ({u}, {v}) is a loop")
        adj[u].add(v)
        adj[v].add(u)
    if names:
        for v in names:
            if not 0 <= v < vertex_count:
                raise GraphInputError(f"name given for vertex {v} outside 0..{vertex_count - 1}")
    return Graph([frozenset(s) for s in adj], names)


def graph_from_arrays(vertex_count: int, src: np.ndarray, dst: np.ndarray) -> Graph:
    """Vectorised :func:`build_graph` for large edge arrays.

    The CSR form is computed first and cached on the result, so kernels run
    without a conversion pass.
    """
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    if src.shape != dst.shape:
        raise GraphInputError("edge arrays differ in length")
    if src.size:
        if src.min() < 0 or dst.min() < 0 or max(src.max(), dst.max()) >= vertex_count:
            raise GraphInputError(f"edge endpoint outside 0..{vertex_count - 1}")
        loops = np.flatnonzero(src == dst)
        if loops.size:
            u = int(src[loops[0]])
            raise GraphInputError(f"edge ({u}, {u}) is a loop")
    both_src = np.concatenate([src, dst])
    both_dst = np.concatenate([dst, src])
    keys = np.unique(both_src * vertex_count + both_dst)
    rows = keys // vertex_count
    cols = (keys % vertex_count).astype(np.int32)
    indptr = np.zeros(vertex_count + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=vertex_count), out=indptr[1:])
    adj = [frozenset(cols[indptr[v]:indptr[v + 1]].tolist()) for v in range(vertex_count)]
    g = Graph(adj)
    g.__dict__["csr"] = (indptr, cols)
    return g


def _two_coloring(g: Graph):
    """BFS 2-colouring; returns ``(color, None)`` or ``(None, odd_cycle)``."""
    color = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    depth = [0] * g.vertex_count
    for root in g.vertices:
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return None, _close_cycle(u, w, parent, depth)
    return color, None


def _close_cycle(u, w, parent, depth):
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right repeats it
    return tuple(left + right[-2::-1])


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Sides ``(X, Y)`` of a 2-colouring, or ``None`` when ``g`` has an odd cycle.

    Each component's smallest vertex lands in ``X``. Use :func:`find_odd_cycle`
    for the certificate of non-bipartiteness.
    """
    color, _ = _two_coloring(g)
    if color is None:
        return None
    x = frozenset(v for v in g.vertices if color[v] == 0)
    return x, frozenset(g.vertices) - x


def find_odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """An odd cycle as a vertex sequence (closing edge implied), or ``None``."""
    return _two_coloring(g)[1]


@dataclass(frozen=True)
class LayerStructure:
    """Distance layers ``L_0(source), L_1(source), ...`` of one BFS."""

    source: int
    layers: tuple[frozenset[int], ...]
    reachable_count: int

    @cached_property
    def distance(self) -> dict[int, int]:
        return {u: d for d, layer in enumerate(self.layers) for u in layer}

    @property
    def eccentricity(self) -> int:
        """Index of the last nonempty layer (the eccentricity when connected)."""
        return len(self.layers) - 1

    @property
    def eccentric_vertices(self) -> frozenset[int]:
        return self.layers[-1]

    def layer(self, level: int) -> frozenset[int]:
        if 0 <= level < len(self.layers):
            return self.layers[level]
        return frozenset()

    def neighbors_in_layer(self, g: Graph, a: int, level: int) -> frozenset[int]:
        """``N(a)`` restricted to layer ``level``."""
        return g.neighbors(a) & self.layer(level)


def bfs_layers(g: Graph, w: int) -> LayerStructure:
    if not 0 <= w < g.vertex_count:
        raise GraphInputError(f"vertex {w} out of range")
    seen = {w}
    layers = [frozenset([w])]
    frontier = [w]
    while True:
        nxt = []
        for u in frontier:
            for x in g.neighbors(u):
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        if not nxt:
            break
        layers.append(frozenset(nxt))
        frontier = nxt
    return LayerStructure(w, tuple(layers), len(seen))


def is_connected(g: Graph) -> bool:
    return g.vertex_count == 0 or bfs_layers(g, 0).reachable_count == g.vertex_count


def _connected_layers(g: Graph, w: int) -> LayerStructure:
    ls = bfs_layers(g, w)
    if ls.reachable_count != g.vertex_count:
        raise DisconnectedGraphError()
    return ls


def eccentricity(g: Graph, w: int) -> int:
    return _connected_layers(g, w).eccentricity


def eccentric_vertices(g: Graph, w: int) -> frozenset[int]:
    return _connected_layers(g, w).eccentric_vertices


def diameter(g: Graph) -> int:
    if g.vertex_count == 0:
        raise GraphInputError("diameter of the empty graph is undefined")
    return max(eccentricity(g, w) for w in g.vertices)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components of ``G - N[z]``, ordered by smallest member."""

    excluded: frozenset[int]
    components: tuple[frozenset[int], ...]
    component_of: Mapping[int, int]

    def same_component(self, a: int, b: int) -> bool:
        ca = self.component_of.get(a)
        return ca is not None and ca == self.component_of.get(b)


def components_avoiding(g: Graph, removed: frozenset[int]) -> ComponentPartition:
    component_of: dict[int, int] = {}
    components = []
    for s in g.vertices:
        if s in removed or s in component_of:
            continue
        idx = len(components)
        component_of[s] = idx
        members = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for x in g.neighbors(u):
                if x not in removed and x not in component_of:
                    component_of[x] = idx
                    members.append(x)
                    stack.append(x)
        components.append(frozenset(members))
    return ComponentPartition(removed, tuple(components), component_of)


def components_minus_closed_neighborhood(g: Graph, z: int) -> ComponentPartition:
    if not 0 <= z < g.vertex_count:
        raise GraphInputError(f"vertex {z} out of range")
    return components_avoiding(g, g.closed_neighbors(z))


def all_closed_neighborhood_partitions(g: Graph) -> tuple[ComponentPartition, ...]:
    """:func:`components_minus_closed_neighborhood` for every vertex, cached on ``g``."""
    cached = g.__dict__.get("_nbr_partitions")
    if cached is None:
        cached = tuple(components_minus_closed_neighborhood(g, z) for z in g.vertices)
        g.__dict__["_nbr_partitions"] = cached
    return cached


def deep_components(g: Graph, z: int) -> tuple[int, ...]:
    """Indices of the components of ``G - N[z]`` holding an eccentric vertex of ``z``."""
    ecc = eccentric_vertices(g, z)
    part = components_minus_closed_neighborhood(g, z)
    return tuple(i for i, comp in enumerate(part.components) if comp & ecc)
