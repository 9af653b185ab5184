"""Exception types shared across the package."""


class OddHoleError(Exception):
    """Base class for all package errors."""


class ParseError(OddHoleError):
    """Malformed graph document."""


class DuplicateEdge(ParseError):
    """A simple graph document repeats an edge (or lists a loop)."""


class NotLineGraph(OddHoleError):
    """No Krausz-style clique cover exists; the graph has no root."""


class BudgetExceeded(OddHoleError):
    """An oracle was asked for more than its vertex budget allows."""


class GenerationExhausted(OddHoleError):
    """Rejection sampling ran out of retries."""


class SearchBudgetExceeded(OddHoleError):
    """Bounded branching search gave up before reaching an answer."""


class DecompositionFailed(OddHoleError):
    """No verified circular model or strip decomposition was found."""


class Disconnected(OddHoleError):
    """A strip walk could not reach the far end-clique."""


class InternalInconsistency(OddHoleError):
    """A structural guarantee failed; indicates a bug, not bad input."""


class PreconditionViolated(OddHoleError):
    """A debug-mode check caught a caller breaking an operation's contract."""
