"""CNF instances: DIMACS parsing and a brute-force satisfiability check."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .errors import DimacsError

MAX_BRUTE_FORCE_VARS = 20


@dataclass(frozen=True)
class SatInstance:
    """CNF formula; literal ``+i`` is variable ``i``, ``-i`` its negation."""

    num_vars: int
    clauses: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise DimacsError("negative variable count")
        for j, clause in enumerate(self.clauses, 1):
            if not clause:
                raise DimacsError(f"clause {j} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise DimacsError(f"clause {j}: literal {lit} outside 1..{self.num_vars}")

    @classmethod
    def of(cls, num_vars: int, clauses) -> SatInstance:
        return cls(num_vars, tuple(frozenset(c) for c in clauses))

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(lit)] == (lit > 0) for lit in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        for c in self.clauses:
            lits = sorted(c, key=lambda lit: (abs(lit), lit < 0))
            lines.append(" ".join(map(str, lits)) + " 0")
        return "\n".join(lines) + "\n"

    def __str__(self):
        def lit(x):
            return f"x{x}" if x > 0 else f"~x{-x}"

        parts = ["(" + " | ".join(lit(x) for x in sorted(c, key=lambda x: (abs(x), x < 0))) + ")"
                 for c in self.clauses]
        return " & ".join(parts) if parts else "true"


def parse_dimacs(text: str, strict: bool = True) -> SatInstance:
    """Parse DIMACS CNF.

    Duplicate literals inside a clause collapse. A clause count that differs
    from the header raises in strict mode and warns otherwise.
    """
    num_vars = declared = None
    clauses = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if num_vars is not None:
                raise DimacsError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}, expected 'p cnf <vars> <clauses>'")
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            if num_vars < 0 or declared < 0:
                raise DimacsError(f"line {lineno}: negative count in header")
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                if not current:
                    raise DimacsError(f"line {lineno}: empty clause")
                clauses.append(frozenset(current))
                current = []
            elif abs(lit) > num_vars:
                raise DimacsError(f"line {lineno}: literal {lit} outside 1..{num_vars}")
            else:
                current.append(lit)
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        if strict:
            raise DimacsError("last clause is not terminated by 0")
        clauses.append(frozenset(current))
    if len(clauses) != declared:
        msg = f"header declares {declared} clauses, found {len(clauses)}"
        if strict:
            raise DimacsError(msg)
        warnings.warn(msg, stacklevel=2)
    return SatInstance(num_vars, tuple(clauses))


def brute_force_sat(inst: SatInstance, cap: int = MAX_BRUTE_FORCE_VARS) -> dict[int, bool] | None:
    """Least satisfying assignment (False before True, variable 1 most significant), or None."""
    if inst.num_vars > cap:
        raise DimacsError(f"brute force refused: {inst.num_vars} variables exceeds cap {cap}")
    for values in itertools.product((False, True), repeat=inst.num_vars):
        assignment = dict(enumerate(values, 1))
        if inst.satisfied_by(assignment):
            return assignment
    return None
