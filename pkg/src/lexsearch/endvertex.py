"""End-vertex decisions for LBFS on AT-free bigraphs.

For a connected AT-free bigraph, ``v`` ends some LBFS exactly when there is
a vertex ``w`` such that ``N(v)`` is contained in ``N(u)`` for every
eccentric vertex ``u`` of ``w``. Checking that takes one BFS per candidate
``w``, so the whole end-vertex set costs O(n (n + m)) plus the subset tests.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import AsteroidalTripleError, DisconnectedGraphError, NotBipartiteError
from .graph import Graph, bfs_layers, find_odd_cycle, is_connected
from .lbfs import end_vertex_set_oracle, end_vertices_from
from .structure import find_asteroidal_triple, is_admissible

__all__ = [
    "NecessaryConditions",
    "EndVertexVerdict",
    "require_atfree_bigraph",
    "decide_end_vertex_atfree_bigraph",
    "end_vertex_set_atfree_bigraph",
    "decide_end_vertex_oracle",
    "necessary_conditions_report",
]


@dataclass(frozen=True)
class NecessaryConditions:
    admissible: bool
    eccentricity: int
    diameter: int

    @property
    def ecc_at_least_diam_minus_one(self) -> bool:
        return self.eccentricity >= self.diameter - 1

    @property
    def holds(self) -> bool:
        return self.admissible and self.ecc_at_least_diam_minus_one

    def to_json(self) -> dict:
        out = asdict(self)
        out["ecc_at_least_diam_minus_one"] = self.ecc_at_least_diam_minus_one
        return out


@dataclass(frozen=True)
class EndVertexVerdict:
    vertex: int
    decision: bool
    witness_w: int | None
    necessary_conditions: NecessaryConditions | None
    method: str

    def to_json(self) -> dict:
        nc = self.necessary_conditions
        return {
            "vertex": self.vertex,
            "end_vertex": self.decision,
            "witness_w": self.witness_w,
            "admissible": nc.admissible if nc else None,
            "ecc": nc.eccentricity if nc else None,
            "diam": nc.diameter if nc else None,
            "method": self.method,
        }


def require_atfree_bigraph(g: Graph) -> None:
    """Raise unless ``g`` is a connected, bipartite, AT-free graph."""
    if not is_connected(g):
        raise DisconnectedGraphError(
            "end-vertex characterization needs a connected graph; metric undefined on disconnected graph"
        )
    cycle = find_odd_cycle(g)
    if cycle is not None:
        raise NotBipartiteError(cycle)
    witness = find_asteroidal_triple(g)
    if witness is not None:
        raise AsteroidalTripleError(witness)


def _conditions(g: Graph, v: int, eccs: list[int]) -> NecessaryConditions:
    return NecessaryConditions(is_admissible(g, v)[0], eccs[v], max(eccs))


def _eccentric_sets(g: Graph):
    layers = [bfs_layers(g, w) for w in g.vertices]
    return [ls.eccentric_vertices for ls in layers], [ls.eccentricity for ls in layers]


def _witness(g: Graph, v: int, ecc_sets) -> int | None:
    nv = g.neighbors(v)
    adj = g.adjacency
    for w, ecc_w in enumerate(ecc_sets):
        if all(nv <= adj[u] for u in ecc_w):
            return w
    return None


def decide_end_vertex_atfree_bigraph(g: Graph, v: int) -> EndVertexVerdict:
    """Decide whether ``v`` ends some LBFS of the connected AT-free bigraph ``g``.

    ``witness_w`` is the least vertex ``w`` all of whose eccentric vertices
    have neighbourhoods containing ``N(v)``.

    Raises
    ------
    DisconnectedGraphError, NotBipartiteError, AsteroidalTripleError
        When ``g`` is outside the class the characterization covers.
    """
    v = g.vertex(v)
    require_atfree_bigraph(g)
    ecc_sets, eccs = _eccentric_sets(g)
    w = _witness(g, v, ecc_sets)
    return EndVertexVerdict(v, w is not None, w, _conditions(g, v, eccs), "characterization")


def end_vertex_set_atfree_bigraph(g: Graph) -> frozenset[int]:
    """All LBFS end-vertices of a connected AT-free bigraph, in polynomial time."""
    require_atfree_bigraph(g)
    ecc_sets, _ = _eccentric_sets(g)
    return frozenset(v for v in g.vertices if _witness(g, v, ecc_sets) is not None)


def decide_end_vertex_oracle(g: Graph, v: int, cap: int | None = None) -> EndVertexVerdict:
    """Exhaustive-search verdict for any graph under the enumeration cap.

    ``witness_w`` is the least start vertex of an LBFS ordering ending at ``v``.
    Necessary conditions are reported only for connected graphs.
    """
    v = g.vertex(v)
    ends = end_vertex_set_oracle(g, cap)
    w = None
    if v in ends:
        w = next(s for s in g.vertices if v in end_vertices_from(g, s, cap))
    nc = None
    if is_connected(g):
        nc = _conditions(g, v, [bfs_layers(g, u).eccentricity for u in g.vertices])
    return EndVertexVerdict(v, v in ends, w, nc, "oracle")


def necessary_conditions_report(g: Graph, v: int) -> NecessaryConditions:
    """Admissibility and eccentricity bound every LBFS end-vertex of an AT-free graph meets.

    Makes no sufficiency claim. Requires ``g`` connected and AT-free.
    """
    v = g.vertex(v)
    if not is_connected(g):
        raise DisconnectedGraphError()
    witness = find_asteroidal_triple(g)
    if witness is not None:
        raise AsteroidalTripleError(witness)
    return _conditions(g, v, [bfs_layers(g, u).eccentricity for u in g.vertices])
