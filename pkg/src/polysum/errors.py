"""Exception hierarchy shared by every polysum module."""


class PolysumError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(PolysumError, ValueError):
    pass


class NoSolution(PolysumError, ArithmeticError):
    pass


class Underdetermined(PolysumError, ArithmeticError):
    pass


class IndexOutOfRange(PolysumError, IndexError):
    pass


class Unbounded(PolysumError):
    """The half-space system admits a recession direction."""


class Empty(PolysumError):
    """The half-space system has no feasible point."""


class NotFullDimensional(PolysumError):
    """The input set has empty interior in its ambient space."""


class ApexMismatch(PolysumError, ValueError):
    pass


class NotMinkowskiVertex(PolysumError):
    pass


class NoParallelEdge(PolysumError):
    """No edge of either summand matches a hull-cone edge (internal bug signal)."""


class InternalInconsistency(PolysumError):
    """Assembled H- and V-data disagree (internal bug signal)."""


class CapDisconnected(InternalInconsistency):
    """Neighbour propagation missed part of a polyhedral cap."""


class TraversalIncomplete(InternalInconsistency):
    """Primal traversal did not reach every vertex of the sum."""


class ParseError(PolysumError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class RayNotSupported(ParseError):
    pass
