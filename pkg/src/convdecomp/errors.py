"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Input violates a geometric precondition (degenerate triangle, collinear set...)."""


class CollinearOverlapError(GeometryError):
    """A ray and a segment lie on a common line and overlap."""


class GeneralPositionError(GeometryError):
    def __init__(self, triple):
        super().__init__(f"collinear triple {triple}")
        self.triple = triple


class BuildError(ValueError):
    def __init__(self, message, items=()):
        super().__init__(message)
        self.items = list(items)


class NotDeletableError(ValueError):
    pass


class ContractionPreconditionError(ValueError):
    pass


class NotContractibleError(ValueError):
    def __init__(self, u, v, report):
        super().__init__(f"edge {u}-{v} is not contractible from {u} to {v}: {report.summary()}")
        self.u = u
        self.v = v
        self.report = report


class InfeasibleError(ValueError):
    pass


class ProofCheckError(AssertionError):
    """A step of the arc counting argument failed on a concrete instance.

    Reaching this means a bug in this codebase, never a valid state.
    """

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details or {}
