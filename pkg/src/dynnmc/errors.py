"""Exception types raised by the dynamic graph structures."""


class GraphError(ValueError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class UnknownEdgeError(GraphError, KeyError):
    pass


class EmptyAdjacencyError(GraphError):
    pass


class StaleHandleError(GraphError):
    pass


class CycleError(GraphError):
    """Linking two vertices that already share a tree."""


class EmptyListError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class SizeLimitError(GraphError):
    pass


class BudgetError(SizeLimitError):
    """An oracle was asked to process an input beyond its budget."""


class DegenerateInputError(GraphError):
    pass
