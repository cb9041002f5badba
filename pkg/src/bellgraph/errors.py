"""Exception hierarchy. Every domain error derives from :class:`BellGraphError`."""


class BellGraphError(Exception):
    pass


class FormatError(BellGraphError, ValueError):
    """Malformed graph, class or word text."""


class InvalidVertex(BellGraphError, ValueError):
    pass


class SizeExceeded(BellGraphError, ValueError):
    """Input larger than an exhaustive routine is allowed to handle."""


class NonIncreasingIndices(BellGraphError, ValueError):
    pass


class FactorMismatch(BellGraphError, ValueError):
    pass


class OracleInconsistency(BellGraphError, ValueError):
    pass


class SearchCapExceeded(BellGraphError, RuntimeError):
    pass


class PreconditionViolated(BellGraphError, ValueError):
    pass


class InvalidPartition(BellGraphError, ValueError):
    pass


class NotBipartite(BellGraphError, ValueError):
    pass


class BagsTooSmall(BellGraphError, ValueError):
    pass


class CapsExceeded(BellGraphError, ValueError):
    pass


class InvalidClassSpec(BellGraphError, ValueError):
    """Forbidden list that is not an antichain or repeats a graph."""
