"""Exception types shared across the toolkit.

Every error raised on purpose by this package derives from
:class:`SwingCompareError`, so callers (and the CLI exit-code mapping)
can distinguish data/validation problems from genuine bugs.
"""


class SwingCompareError(Exception):
    """Base class for all toolkit errors."""


class IoFailure(SwingCompareError):
    """A file could not be read or written."""


class MalformedFile(SwingCompareError):
    """A file parsed, but its structure does not match the expected format."""


class SchemaMismatch(MalformedFile):
    """A pose file's joint names do not match the skeleton schema."""


class NonFiniteValue(MalformedFile):
    """A coordinate or embedding entry is NaN or infinite."""


class RaggedRows(MalformedFile):
    """Embedding rows do not all share the declared dimensionality."""


class DimensionMismatch(SwingCompareError):
    """Two vectors or embedding sequences have incompatible dimensions."""


class DegeneratePose(SwingCompareError):
    """A pose collapses to a point (or zero-length club), so a scale or
    direction is undefined."""


class EmptyMatrix(SwingCompareError):
    """A distance matrix with zero rows or columns was passed to DTW."""


class PathShapeMismatch(SwingCompareError):
    """An alignment path does not fit the distance matrix it is used with."""


class EmptySignal(SwingCompareError):
    """An empty signal was passed where at least one sample is required."""


class LengthMismatch(SwingCompareError):
    """Two series that must have equal length do not."""


class TooFewSamples(SwingCompareError):
    """A statistic needs more samples than were provided."""


class InvalidParams(SwingCompareError):
    """Generator or session parameters violate their invariants."""


class InvalidWarp(SwingCompareError):
    """Warp control points are not strictly monotone or miss the endpoints."""


class InvalidPair(SwingCompareError):
    """A clip pair failed validation; carries the individual violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"clip pair is inconsistent: {lines}")


class SchemaVersionMismatch(SwingCompareError):
    """A report file was written by an incompatible schema version."""
