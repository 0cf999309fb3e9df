class AdjtoricError(Exception):
    """Base class for every error raised by the library."""


class ConfigurationError(AdjtoricError, ValueError):
    """The input points do not form a valid vertex configuration.

    ``reason`` is one of ``malformed``, ``non-lifted``, ``duplicate``,
    ``rank-deficient`` or ``non-vertex``.
    """

    def __init__(self, message: str, reason: str, index: int = None):
        super().__init__(message)
        self.reason = reason
        self.index = index


class DegenerateSimplexError(AdjtoricError, ValueError):
    def __init__(self, indices):
        super().__init__(f"Subset {_one_based(indices)} spans a degenerate simplex")
        self.indices = tuple(indices)


class NonGenericWeightError(AdjtoricError, ValueError):
    """The weight vector is not generic.

    Raised by the triangulation (``subset`` and ``index`` of the extra point
    lying on a lower face) and by the initial ideal (``binomial`` whose two
    terms tie under the weight).
    """

    def __init__(self, message: str, subset=None, index=None, binomial=None):
        super().__init__(message)
        self.subset = subset
        self.index = index
        self.binomial = binomial


class WeightSearchError(AdjtoricError, RuntimeError):
    pass


class InputError(AdjtoricError, ValueError):
    """Located error in an input document."""

    def __init__(self, message: str, line: int = None, column: int = None, field: str = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if field is not None:
            location.append(f"field {field}")
        prefix = ", ".join(location)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.line = line
        self.column = column
        self.field = field


def _one_based(indices):
    return "{" + ",".join(str(i + 1) for i in indices) + "}"
