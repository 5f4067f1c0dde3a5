"""Exception hierarchy for the ddmog package.

Everything raised on purpose derives from DdmogError, so the CLI can map
library failures to a single exit code. Parse-time errors carry the
1-based line number of the offending record when one is known.
"""

from __future__ import annotations


class DdmogError(Exception):
    """Base class for all errors raised by this package."""


# ---- graph construction -------------------------------------------------


class GraphError(DdmogError):
    """Invalid oriented-graph data."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VertexOutOfRange(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class TwoCycle(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


# ---- labelings -----------------------------------------------------------


class LabelingError(DdmogError):
    pass


class MissingLabel(LabelingError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has no label")


class NonPositiveLabel(LabelingError):
    pass


class DuplicateLabelAssignment(LabelingError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# ---- constructions -------------------------------------------------------


class ConstructionError(DdmogError):
    pass


class NotDDM(ConstructionError):
    pass


class ImbalanceNotOne(ConstructionError):
    pass


class SecondOperandNotBalanced(ConstructionError):
    pass


class OrderTooSmall(ConstructionError):
    pass


class InvalidK(ConstructionError):
    pass


class ComponentNotBalanced(ConstructionError):
    pass


class NotBalanced(ConstructionError):
    pass


class UncoveredWeightClass(ConstructionError):
    pass


class LabelRangeMismatch(ConstructionError):
    pass


class MaxWeightExceedsN(ConstructionError):
    pass


class WeightOutOfWindow(ConstructionError):
    pass


class ClassSumMismatch(ConstructionError):
    def __init__(self, class_index: int, positive_sum: int, negative_sum: int):
        self.class_index = class_index
        super().__init__(
            f"weight class {class_index}: positive-side label sum {positive_sum}"
            f" != negative-side label sum {negative_sum}"
        )


class EllOutOfRange(ConstructionError):
    pass


# ---- search --------------------------------------------------------------


class SearchError(DdmogError):
    pass


class OrderExceedsCap(SearchError):
    pass


class EdgeCountExceedsCap(SearchError):
    pass


# ---- catalog -------------------------------------------------------------


class UnknownEntry(DdmogError):
    pass


class CatalogIntegrityError(DdmogError):
    pass


# ---- file format ---------------------------------------------------------


class ParseError(DdmogError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadHeader(ParseError):
    pass


class BadRecord(ParseError):
    pass
