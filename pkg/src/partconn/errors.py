class GraphError(ValueError):
    """Malformed graph, vertex set, or partition."""


class CapacityError(RuntimeError):
    """Instance exceeds the size limit of an exhaustive routine."""


class NotTreeConnected(ValueError):
    """Raised when a graph lacks the requested number of edge-disjoint spanning trees.

    ``partition`` is a Nash-Williams certificate: a vertex partition P with
    e(P) < m * (|P| - 1).
    """

    def __init__(self, m, partition, crossing):
        self.m = m
        self.partition = partition
        self.crossing = crossing
        super().__init__(
            f"not {m}-tree-connected: partition into {len(partition)} parts "
            f"has {crossing} crossing edges < {m * (len(partition) - 1)}"
        )


class PipelineStall(RuntimeError):
    """A constructive pipeline could not complete one of its stages."""

    def __init__(self, stage, message):
        self.stage = stage
        super().__init__(f"{stage}: {message}")
