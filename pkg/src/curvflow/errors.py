"""Exception and warning types shared across the package."""


class CurvflowError(Exception):
    """Base class for all curvflow errors."""


class EmptyNetworkError(CurvflowError):
    pass


class IsolatedNodeError(CurvflowError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"node {node} has degree 0; mean-neighbor-degree weight undefined")


class MissingNodeWeightError(CurvflowError):
    pass


class NonpositiveWeightError(CurvflowError):
    pass


class UnknownNodeError(CurvflowError):
    pass


class UnknownEdgeError(CurvflowError):
    pass


class UndirectedNetworkError(CurvflowError):
    """Raised when a directed-only operation is called on an undirected network."""


class EmptyInputError(CurvflowError):
    pass


class NonpositiveBandwidthError(CurvflowError):
    pass


class DegenerateSupportError(CurvflowError):
    pass


class InfeasibleMassError(CurvflowError):
    pass


class LabelCollisionError(CurvflowError):
    pass


class InvalidSpecError(CurvflowError):
    pass


class TargetTooLargeError(CurvflowError):
    pass


class ParseError(CurvflowError):
    def __init__(self, line_no, reason):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class DuplicateDirectedEdgeError(ParseError):
    def __init__(self, line_no, u, v):
        ParseError.__init__(self, line_no, f"duplicate directed edge {u} -> {v}")


class StepTooLargeWarning(UserWarning):
    """A flow step drove some edge weight to zero or below; it was clamped."""


class DuplicateEdgeWarning(UserWarning):
    """Duplicate undirected edges in the input were collapsed."""


class CorrectionTooLargeWarning(UserWarning):
    """Denoising correction term is not small relative to the edge weights."""
