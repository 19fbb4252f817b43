"""Exception types shared across the package."""

from __future__ import annotations


class FlagtriError(Exception):
    """Base class for all package errors."""


class InvalidInput(FlagtriError, ValueError):
    """Malformed construction input (empty facet, bad vertex id, bad parameter)."""


class ParseError(InvalidInput):
    """A facet file could not be parsed; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FaceNotFound(FlagtriError, LookupError):
    """The requested face is not in the complex."""


class EdgeNotFound(FaceNotFound):
    """The requested edge is not in the 1-skeleton."""


class InadmissibleContraction(FlagtriError, ValueError):
    """Edge contraction refused; carries the witness induced 4-cycle."""

    def __init__(self, edge, cycle):
        self.edge = tuple(edge)
        self.cycle = tuple(cycle)
        super().__init__(
            f"edge {self.edge} lies in the induced 4-cycle {self.cycle}"
        )


class NotPure(FlagtriError, ValueError):
    """Operation requires a pure complex (all facets of equal dimension)."""


class NotManifold(FlagtriError, ValueError):
    """Operation requires a closed manifold."""


class DimensionMismatch(FlagtriError, ValueError):
    """Complex dimension incompatible with the requested invariant."""


class ConnectedSumInvalid(FlagtriError, ValueError):
    """A connected-sum precondition failed; names the failing check."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        message = f"connected sum precondition failed: {check}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class HandleInvalid(FlagtriError, ValueError):
    """A handle-addition precondition failed."""


class HandleTooClose(HandleInvalid):
    """The two handle regions are closer than the required distance 4."""

    def __init__(self, u: int, v: int, distance):
        self.u = u
        self.v = v
        self.distance = distance
        super().__init__(
            f"vertices {u} and {v} are at distance {distance} < 4"
        )


class ConstructionInvariantViolated(FlagtriError, RuntimeError):
    """A constructor's certified invariant failed its runtime check."""


class RoundAborted(FlagtriError, RuntimeError):
    """A search round exceeded its move budget."""

    def __init__(self, round_index: int, moves: int):
        self.round_index = round_index
        self.moves = moves
        super().__init__(f"round {round_index} aborted after {moves} moves")
