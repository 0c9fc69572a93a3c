"""Exception types shared across the package.

Input problems (malformed documents, unknown node references) are
``ValueError`` subclasses; failures of the computation itself derive from
:class:`ImpactGraphError` so callers can tell the two apart.
"""


class MapFormatError(ValueError):
    """The input document does not describe a valid cognitive map."""


class UnknownNodeError(ValueError):
    """A node reference matched neither a label nor a valid index."""

    def __init__(self, reference, labels):
        self.reference = reference
        self.labels = tuple(labels)
        super().__init__(
            f"unknown node {reference!r}; expected a label in "
            f"{list(self.labels)} or an index between 1 and {len(self.labels)}"
        )


class ImpactGraphError(Exception):
    """Base class for failures during impact computation."""


class PathLimitError(ImpactGraphError):
    """Simple-path enumeration exceeded the configured budget."""

    def __init__(self, source, target, limit):
        self.source = source
        self.target = target
        self.limit = limit
        super().__init__(
            f"more than {limit} simple paths from node {source} to node "
            f"{target}; raise max_paths to analyze this pair"
        )


class LcmOverflowError(ImpactGraphError):
    """Tie-break window arithmetic exceeded the exact-integer bound."""

    def __init__(self, value, limit):
        self.value = value
        self.limit = limit
        super().__init__(
            f"tie-break window {value} exceeds the exact-integer bound {limit}"
        )


class NormalizationError(ImpactGraphError):
    """A normalization denominator was too close to zero to divide by."""

    def __init__(self, denominator, threshold):
        self.denominator = denominator
        self.threshold = threshold
        super().__init__(
            f"normalization denominator {denominator!r} is within "
            f"{threshold!r} of zero; the steady state is undefined"
        )


class ConvergenceError(ImpactGraphError):
    """Fixed-point iteration did not settle within the step budget."""

    def __init__(self, max_steps, residual):
        self.max_steps = max_steps
        self.residual = residual
        super().__init__(
            f"no fixed point after {max_steps} steps (last residual {residual!r})"
        )
