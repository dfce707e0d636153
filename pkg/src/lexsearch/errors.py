"""Exception hierarchy shared by the library and the CLI."""


class LexsearchError(Exception):
    """Base class for every error raised by lexsearch."""


class GraphInputError(LexsearchError, ValueError):
    """Malformed graph input: bad endpoint, loop, unparsable file."""


class DisconnectedGraphError(LexsearchError, ValueError):
    def __init__(self, message="metric undefined on disconnected graph"):
        super().__init__(message)


class NotBipartiteError(LexsearchError, ValueError):
    """Raised where a bipartite input is required; carries an odd cycle."""

    def __init__(self, odd_cycle):
        self.odd_cycle = tuple(odd_cycle)
        super().__init__(
            "graph is not bipartite; odd cycle: " + " ".join(map(str, self.odd_cycle))
        )


class AsteroidalTripleError(LexsearchError, ValueError):
    """Raised where an AT-free input is required; carries the witness."""

    def __init__(self, witness):
        self.witness = witness
        a, b, c = witness.triple
        super().__init__(f"graph contains an asteroidal triple: {a} {b} {c}")


class CapExceededError(LexsearchError):
    """Exhaustive search refused because the graph is above the size cap."""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(
            f"exhaustive LBFS enumeration refused: {n} vertices exceeds cap {cap} "
            "(raise it with --cap or LEXSEARCH_CAP)"
        )


class OrderingError(LexsearchError, ValueError):
    """A vertex sequence is not a permutation or not an LBFS ordering."""


class DimacsError(LexsearchError, ValueError):
    """Malformed DIMACS CNF input."""


class ReductionError(LexsearchError, ValueError):
    """Input outside what a gadget reduction accepts."""
