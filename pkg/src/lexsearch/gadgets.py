"""Hardness gadgets for the LBFS (beginning-)end-vertex problems on bigraphs.

``H_k`` is a ten-vertex switch; ``G_n`` chains ``H_1..H_n`` below a root
``r_n`` so that an LBFS from the root chooses, for every ``i``, which of
``x_i`` and ``xbar_i`` is visited before ``r_0``. ``G_I`` hangs clause
vertices and a target ``t`` off ``G_n``: ``t`` can end an LBFS from ``r_n``
exactly when the formula is satisfiable.

Landmark names: ``r{k}``, ``a{k}``, ``abar{k}``, ``b{k}``, ``bbar{k}``,
``bprime{k}``, ``bbarprime{k}``, ``c{k}``, ``y{k}``, ``ybar{k}``,
``x{k}``, ``xbar{k}``, path interiors ``py{k}_{j}`` / ``pybar{k}_{j}``,
clause vertices ``c^{j}`` and the target ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DisconnectedGraphError, OrderingError, ReductionError
from .graph import Graph, build_graph, diameter, is_connected
from .lbfs import Ordering, end_vertex_set_oracle, is_beginning_end_pair_oracle, verify_lbfs_ordering
from .sat import SatInstance, brute_force_sat

__all__ = [
    "H_EDGES",
    "ReductionArtifact",
    "BevReduction",
    "gadget_vertex_count",
    "build_H",
    "build_G",
    "build_G_from_sat",
    "extract_assignment",
    "reduce_bev_to_ev",
    "certify_sat_reduction",
    "certify_bev_reduction",
]

# (role, role) edges of H_k; vertex order below fixes the local ids
H_ROLES = ("r", "a", "abar", "b", "bbar", "c", "bprime", "y", "bbarprime", "ybar")
H_EDGES = (
    ("r", "a"), ("r", "abar"),
    ("a", "b"), ("b", "c"),
    ("abar", "bbar"), ("bbar", "c"),
    ("b", "y"), ("bprime", "y"), ("bprime", "a"),
    ("bbarprime", "ybar"), ("bbarprime", "abar"), ("ybar", "bbar"),
)


def gadget_vertex_count(n: int) -> int:
    return 4 * n * n + 8 * n + 1


class _Builder:
    def __init__(self):
        self.ids: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []

    def add(self, name: str) -> int:
        if name in self.ids:
            raise ValueError(f"duplicate landmark {name}")
        self.ids[name] = len(self.ids)
        return self.ids[name]

    def edge(self, a: str, b: str) -> None:
        self.edges.append((self.ids[a], self.ids[b]))

    def graph(self) -> Graph:
        return build_graph(len(self.ids), self.edges, {v: k for k, v in self.ids.items()})


def _add_H(bld: _Builder, k: int) -> None:
    for role in H_ROLES:
        bld.add(f"{role}{k}")
    for a, b in H_EDGES:
        bld.edge(f"{a}{k}", f"{b}{k}")


def _add_path(bld: _Builder, start: str, end: str, interior: str, length: int) -> None:
    prev = start
    for j in range(1, length):
        name = f"{interior}_{j}"
        bld.add(name)
        bld.edge(prev, name)
        prev = name
    bld.add(end)
    bld.edge(prev, end)


def _add_G(bld: _Builder, n: int) -> None:
    bld.add("r0")
    for k in range(1, n + 1):
        _add_H(bld, k)
        bld.edge(f"r{k - 1}", f"c{k}")
        _add_path(bld, f"y{k}", f"x{k}", f"py{k}", 4 * k - 3)
        _add_path(bld, f"ybar{k}", f"xbar{k}", f"pybar{k}", 4 * k - 3)


@dataclass(frozen=True)
class ReductionArtifact:
    """A gadget graph plus the ids of its named vertices."""

    graph: Graph
    landmarks: dict[str, int] = field(hash=False)
    num_vars: int
    num_clauses: int = 0

    def __getitem__(self, name: str) -> int:
        return self.landmarks[name]

    @property
    def root(self) -> int:
        return self.landmarks[f"r{self.num_vars}"]

    @property
    def target(self) -> int | None:
        return self.landmarks.get("t")

    def literal_vertex(self, lit: int) -> int:
        return self.landmarks[f"x{lit}" if lit > 0 else f"xbar{-lit}"]


def build_H(k: int = 1) -> Graph:
    """The ten-vertex switch ``H_k`` with 12 edges; ``k`` only names the vertices."""
    if k < 1:
        raise ReductionError(f"H_k needs k >= 1, got {k}")
    bld = _Builder()
    _add_H(bld, k)
    return bld.graph()


def build_G(n: int) -> ReductionArtifact:
    """The rooted gadget ``G_n`` on ``4n^2 + 8n + 1`` vertices."""
    if n < 0:
        raise ReductionError(f"G_n needs n >= 0, got {n}")
    bld = _Builder()
    _add_G(bld, n)
    return ReductionArtifact(bld.graph(), dict(bld.ids), n)


def build_G_from_sat(inst: SatInstance) -> ReductionArtifact:
    """``G_I``: ``G_n`` plus one vertex per clause (joined to its literals) and ``t`` on ``r_0``."""
    if inst.num_vars < 1:
        raise ReductionError("reduction needs at least one variable")
    for j, clause in enumerate(inst.clauses, 1):
        if not clause:
            raise ReductionError(f"clause {j} is empty")
        if len(clause) > 3:
            raise ReductionError(f"clause {j} has {len(clause)} literals; the reduction takes at most 3")
    bld = _Builder()
    _add_G(bld, inst.num_vars)
    for j, clause in enumerate(inst.clauses, 1):
        bld.add(f"c^{j}")
        for lit in sorted(clause, key=lambda x: (abs(x), x < 0)):
            bld.edge(f"c^{j}", f"x{lit}" if lit > 0 else f"xbar{-lit}")
    bld.add("t")
    bld.edge("t", "r0")
    return ReductionArtifact(bld.graph(), dict(bld.ids), inst.num_vars, len(inst.clauses))


def extract_assignment(sigma, art: ReductionArtifact) -> dict[int, bool]:
    """Variable ``i`` is true iff ``x_i`` precedes ``r_0`` in the LBFS ordering ``sigma``.

    ``sigma`` must be an LBFS ordering of ``art.graph`` starting at the root.
    """
    order = sigma if isinstance(sigma, Ordering) else Ordering(tuple(int(v) for v in sigma))
    check = verify_lbfs_ordering(art.graph, order)
    if not check:
        raise OrderingError(f"not an LBFS ordering (violation at position {check.position})")
    if order.start != art.root:
        raise OrderingError(
            f"ordering starts at {art.graph.name(order.start)}, expected root r{art.num_vars}"
        )
    r0 = order.position(art["r0"])
    return {i: order.position(art[f"x{i}"]) < r0 for i in range(1, art.num_vars + 1)}


@dataclass(frozen=True)
class BevReduction:
    graph: Graph
    target: int
    path: tuple[int, ...]

    @property
    def far_end(self) -> int:
        return self.path[-1]


def reduce_bev_to_ev(g: Graph, s: int, t: int) -> BevReduction:
    """Attach a path of ``diam(g) + 1`` new edges at ``s``.

    Some LBFS of the result ends at ``t`` iff some LBFS of ``g`` starts at
    ``s`` and ends at ``t``. New vertices take ids ``n, n+1, ...`` walking
    away from ``s``; the last one is named ``s'``.
    """
    s, t = g.vertex(s), g.vertex(t)
    if s == t:
        raise ReductionError("s and t must differ")
    if not is_connected(g):
        raise DisconnectedGraphError()
    n = g.vertex_count
    length = diameter(g) + 1
    path = tuple(range(n, n + length))
    edges = g.edges() + list(zip((s,) + path[:-1], path))
    names = g.names
    for j, v in enumerate(path, 1):
        names[v] = f"p{j}"
    names[path[-1]] = "s'"
    return BevReduction(build_graph(n + length, edges, names), t, path)


def certify_sat_reduction(inst: SatInstance, cap: int | None = None, label: str | None = None) -> dict:
    """Compare brute-force satisfiability with LBFS reachability of ``t`` from ``r_n`` in ``G_I``."""
    art = build_G_from_sat(inst)
    sat = brute_force_sat(inst) is not None
    reach = is_beginning_end_pair_oracle(art.graph, art.root, art.target, cap)
    return {"instance": label or str(inst), "sat": sat, "lbfs_reachable_t": reach, "agree": sat == reach}


def certify_bev_reduction(g: Graph, s: int, t: int, cap: int | None = None) -> dict:
    """Compare the beginning-end oracle on ``g`` with the end-vertex oracle on the reduced graph."""
    red = reduce_bev_to_ev(g, s, t)
    bev = is_beginning_end_pair_oracle(g, s, t, cap)
    ev = t in end_vertex_set_oracle(red.graph, cap)
    return {"s": s, "t": t, "bev": bev, "ev": ev, "agree": bev == ev}
