"""Exception hierarchy shared by every module of the package."""


class SurplusError(Exception):
    """Base class for all errors raised by surpluscut."""


class InvalidParameter(SurplusError, ValueError):
    """A numeric argument is outside its admissible range."""


class GraphError(SurplusError, ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge {u}-{v}")
        self.u, self.v = u, v


class VertexOutOfRange(GraphError):
    def __init__(self, v, n):
        super().__init__(f"vertex {v} out of range [0, {n})")
        self.v, self.n = v, n


class NotAnEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"{u}-{v} is not an edge")
        self.u, self.v = u, v


class IsolatedVertexError(GraphError):
    def __init__(self, v):
        super().__init__(f"vertex {v} is isolated; strip isolated vertices first")
        self.v = v


class NotRegular(GraphError):
    pass


class TooLarge(SurplusError, ValueError):
    pass


class EdgeListParseError(SurplusError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class NotSparse(SurplusError):
    """The graph violates the neighborhood sparsity condition at some vertex."""

    def __init__(self, witness, c, epsilon):
        super().__init__(
            f"graph is not ({c:g},{epsilon:g})-sparse: vertex {witness} violates the bound"
        )
        self.witness = witness
        self.c = c
        self.epsilon = epsilon


class LengthMismatch(SurplusError, ValueError):
    pass


class ArcsinDomain(SurplusError, ArithmeticError):
    pass


class InvalidPartialCut(SurplusError, ValueError):
    pass


class NoConvergence(SurplusError, RuntimeError):
    pass


class InvariantViolation(SurplusError, AssertionError):
    """A mathematical guarantee failed on a concrete input; indicates a bug."""
