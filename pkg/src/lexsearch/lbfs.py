"""Lexicographic breadth-first search.

:func:`lbfs` is the linear-time partition-refinement search. The remaining
functions are exhaustive tools for small graphs: :func:`verify_lbfs_ordering`
replays a given order, :func:`enumerate_lbfs_orderings` yields every order an
LBFS can produce, and the ``*_oracle`` functions answer end-vertex questions
by memoised search over slice states.

A slice state is the ordered partition of the unvisited vertices into
classes of equal label, front slice first. It determines every possible
continuation of the run, which is what makes memoising on it sound.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import CapExceededError, GraphInputError, OrderingError
from .graph import Graph

__all__ = [
    "DEFAULT_CAP",
    "Ordering",
    "TiePolicy",
    "VerifyResult",
    "lbfs",
    "verify_lbfs_ordering",
    "enumerate_lbfs_orderings",
    "end_vertex_set_oracle",
    "end_vertices_from",
    "is_beginning_end_pair_oracle",
    "tracked_visit_orders",
]

DEFAULT_CAP = 40


@dataclass(frozen=True)
class Ordering(Sequence[int]):
    """A vertex order; index ``i`` holds the ``(i+1)``-th visited vertex."""

    order: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise OrderingError("ordering repeats a vertex")

    @cached_property
    def inverse(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def position(self, v: int) -> int:
        return self.inverse[v]

    def precedes(self, a: int, b: int) -> bool:
        return self.inverse[a] < self.inverse[b]

    @property
    def start(self) -> int:
        return self.order[0]

    @property
    def end_vertex(self) -> int:
        return self.order[-1]

    def __getitem__(self, i):
        return self.order[i]

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __str__(self):
        return " ".join(map(str, self.order))


@dataclass(frozen=True)
class TiePolicy:
    """How :func:`lbfs` picks among the vertices of the front slice.

    ``min-id`` and ``max-id`` take the smallest/largest id. ``seeded-random``
    draws a random priority for every vertex from ``seed`` and always takes
    the highest-priority candidate, so a seed fixes the whole run.
    """

    kind: str = "min-id"
    seed: int | None = None

    KINDS = ("min-id", "max-id", "seeded-random")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown tie policy {self.kind!r}; expected one of {self.KINDS}")
        if self.kind == "seeded-random" and self.seed is None:
            raise ValueError("seeded-random tie policy needs a seed")

    @classmethod
    def parse(cls, text: str, seed: int | None = None) -> TiePolicy:
        aliases = {"min": "min-id", "max": "max-id", "random": "seeded-random"}
        kind = aliases.get(text, text)
        if kind == "seeded-random" and seed is None:
            seed = 0
        return cls(kind, seed if kind == "seeded-random" else None)

    def __str__(self):
        return f"seeded-random({self.seed})" if self.kind == "seeded-random" else self.kind

    def ranks(self, n: int) -> np.ndarray | None:
        """Rank of every vertex (lower rank wins a tie); ``None`` means by id."""
        if self.kind == "min-id":
            return None
        if self.kind == "max-id":
            return np.arange(n - 1, -1, -1, dtype=np.int64)
        return np.random.default_rng(self.seed).permutation(n).astype(np.int64)


MIN_ID = TiePolicy()


def _relabelled_csr(g: Graph, ranks: np.ndarray):
    indptr, indices = g.csr
    n = g.vertex_count
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    new_src = ranks[src]
    new_dst = ranks[indices.astype(np.int64)]
    perm = np.lexsort((new_dst, new_src))
    new_indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(new_src, minlength=n), out=new_indptr[1:])
    return new_indptr, new_dst[perm].astype(np.int32)


def lbfs(g: Graph, start: int | None = None, policy: TiePolicy = MIN_ID) -> Ordering:
    """Run one LBFS in O(n + m).

    Parameters
    ----------
    g : Graph
    start : int, optional
        First vertex; when omitted the tie policy picks it among all vertices.
    policy : TiePolicy
        Tie-breaking rule inside the front slice. Also picks the restart
        vertex once a component is exhausted.
    """
    n = g.vertex_count
    if start is not None and not 0 <= start < n:
        raise GraphInputError(f"start vertex {start} out of range for {n} vertices")
    ranks = policy.ranks(n)
    if ranks is None:
        indptr, indices = g.csr
        order = _kernels.lbfs_order(indptr, indices, n, -1 if start is None else start)
    else:
        indptr, indices = _relabelled_csr(g, ranks)
        s = -1 if start is None else int(ranks[start])
        by_rank = np.empty(n, dtype=np.int64)
        by_rank[ranks] = np.arange(n, dtype=np.int64)
        order = by_rank[_kernels.lbfs_order(indptr, indices, n, s)]
    return Ordering(tuple(order.tolist()))


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of :func:`verify_lbfs_ordering`.

    ``position`` is the 1-based position of the first vertex that was not in
    the front slice when it was visited, ``None`` when the order is valid.
    """

    ok: bool
    position: int | None = None

    def __bool__(self):
        return self.ok


def _as_permutation(g: Graph, sigma: Iterable[int]) -> list[int]:
    seq = [int(v) for v in sigma]
    if sorted(seq) != list(range(g.vertex_count)):
        raise OrderingError(f"ordering is not a permutation of 0..{g.vertex_count - 1}")
    return seq


def verify_lbfs_ordering(g: Graph, sigma: Iterable[int]) -> VerifyResult:
    """Replay ``sigma`` and check each vertex lies in the front slice."""
    seq = _as_permutation(g, sigma)
    indptr, indices = g.csr
    bad = _kernels.first_violation(indptr, indices, g.vertex_count, np.asarray(seq, dtype=np.int64))
    return VerifyResult(True) if bad < 0 else VerifyResult(False, int(bad) + 1)


def resolve_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("LEXSEARCH_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise GraphInputError(f"LEXSEARCH_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP


def _check_cap(g: Graph, cap: int | None) -> None:
    limit = resolve_cap(cap)
    if g.vertex_count > limit:
        raise CapExceededError(g.vertex_count, limit)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _refine(partition: tuple[int, ...], v: int, nb: int) -> tuple[int, ...]:
    """Slice state after visiting ``v``: drop it, split every slice by ``N(v)``."""
    keep = ~(1 << v)
    out = []
    for s in partition:
        s &= keep
        if not s:
            continue
        inside = s & nb
        if inside and inside != s:
            out.append(inside)
            out.append(s ^ inside)
        else:
            out.append(s)
    return tuple(out)


def _initial_state(g: Graph, start: int | None) -> tuple[int, ...]:
    n = g.vertex_count
    if n == 0:
        return ()
    full = (1 << n) - 1
    if start is None:
        return (full,)
    if not 0 <= start < n:
        raise GraphInputError(f"start vertex {start} out of range for {n} vertices")
    return _refine((full,), start, g.masks[start])


def enumerate_lbfs_orderings(g: Graph, start: int | None = None, cap: int | None = None) -> Iterator[Ordering]:
    """Yield every LBFS ordering of ``g`` in lexicographic order.

    With ``start`` given only orderings beginning there are produced. Refuses
    graphs above the enumeration cap (``cap`` argument, else ``LEXSEARCH_CAP``,
    else 40 vertices).
    """
    _check_cap(g, cap)
    masks = g.masks
    prefix = [] if start is None else [start]
    state = _initial_state(g, start)

    def walk(state):
        if not state:
            yield Ordering(tuple(prefix))
            return
        for v in _bits(state[0]):
            prefix.append(v)
            yield from walk(_refine(state, v, masks[v]))
            prefix.pop()

    yield from walk(state)


class _Explorer:
    """Memoised search over slice states of one graph."""

    def __init__(self, g: Graph, tracked: int = 0):
        self.masks = g.masks
        self.tracked = tracked
        self._ends: dict[tuple[int, ...], int] = {}
        self._orders: dict[tuple[int, ...], frozenset[tuple[int, ...]]] = {}

    def _advance(self, state, seen):
        # follow forced moves (singleton front slice) without memoising them
        masks = self.masks
        while state and not state[0] & (state[0] - 1):
            v = state[0].bit_length() - 1
            if seen is not None and self.tracked >> v & 1:
                seen.append(v)
            if len(state) == 1 and state[0] == 1 << v:
                return (), v
            state = _refine(state, v, masks[v])
        return state, None

    def end_mask(self, state: tuple[int, ...]) -> int:
        """Bitmask of the vertices some continuation of ``state`` visits last."""
        state, last = self._advance(state, None)
        if last is not None:
            return 1 << last
        hit = self._ends.get(state)
        if hit is not None:
            return hit
        masks = self.masks
        out = 0
        for v in _bits(state[0]):
            out |= self.end_mask(_refine(state, v, masks[v]))
        self._ends[state] = out
        return out

    def tracked_orders(self, state: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
        """Every order in which the tracked vertices can still be visited."""
        seen: list[int] = []
        state, last = self._advance(state, seen)
        if last is not None or not state:
            return frozenset([tuple(seen)])
        hit = self._orders.get(state)
        if hit is None:
            masks = self.masks
            acc = set()
            for v in _bits(state[0]):
                head = (v,) if self.tracked >> v & 1 else ()
                for tail in self.tracked_orders(_refine(state, v, masks[v])):
                    acc.add(head + tail)
            hit = frozenset(acc)
            self._orders[state] = hit
        pre = tuple(seen)
        return frozenset(pre + tail for tail in hit)


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


def end_vertex_set_oracle(g: Graph, cap: int | None = None) -> frozenset[int]:
    """All vertices ``t`` such that some LBFS ordering of ``g`` ends at ``t``."""
    _check_cap(g, cap)
    if g.vertex_count == 0:
        return frozenset()
    return _mask_to_set(_Explorer(g).end_mask(_initial_state(g, None)))


def end_vertices_from(g: Graph, start: int, cap: int | None = None) -> frozenset[int]:
    """All possible last vertices of LBFS orderings that begin at ``start``."""
    _check_cap(g, cap)
    return _mask_to_set(_Explorer(g).end_mask(_initial_state(g, start)) if g.vertex_count > 1 else 1 << start)


def is_beginning_end_pair_oracle(g: Graph, s: int, t: int, cap: int | None = None) -> bool:
    """Whether some LBFS ordering starts at ``s`` and ends at ``t``."""
    n = g.vertex_count
    for v in (s, t):
        if not 0 <= v < n:
            raise GraphInputError(f"vertex {v} out of range for {n} vertices")
    if n == 1:
        return True
    if s == t:
        return False
    return t in end_vertices_from(g, s, cap)


def tracked_visit_orders(
    g: Graph, tracked: Iterable[int], start: int | None = None, cap: int | None = None
) -> frozenset[tuple[int, ...]]:
    """Projections of all LBFS orderings onto ``tracked``.

    Returns the set of sequences in which the tracked vertices appear, taken
    over every LBFS ordering (beginning at ``start`` when given).
    """
    _check_cap(g, cap)
    mask = 0
    for v in tracked:
        mask |= 1 << v
    state = _initial_state(g, start)
    first = (start,) if start is not None and mask >> start & 1 else ()
    return frozenset(first + o for o in _Explorer(g, mask).tracked_orders(state))
