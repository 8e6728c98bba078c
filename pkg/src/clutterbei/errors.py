"""Exception hierarchy. Every library error derives from :class:`ClutterError`."""


class ClutterError(ValueError):
    pass


class DuplicateLabel(ClutterError):
    pass


class UnknownLabelInEdge(ClutterError):
    pass


class EmptyEdge(ClutterError):
    pass


class NotAnAntichain(ClutterError):
    pass


class UnknownVertex(ClutterError):
    pass


class LabelCollision(ClutterError):
    pass


class DescriptorMismatch(ClutterError):
    pass


class BlocksDontCoverEdges(ClutterError):
    pass


class GlueVertexNotFree(ClutterError):
    pass


class ComplexityGuard(ClutterError):
    """Raised when an exhaustive computation would exceed its vertex budget."""

    def __init__(self, what, n, budget, flag=None):
        self.what = what
        self.n = n
        self.budget = budget
        self.flag = flag
        msg = f"{what}: {n} vertices exceeds the budget of {budget}"
        if flag:
            msg += f" (raise it with {flag})"
        super().__init__(msg)


class FormatError(ClutterError):
    """Malformed clutter file."""


class Unattainable(ClutterError):
    """Random generation could not place the requested number of edges."""
