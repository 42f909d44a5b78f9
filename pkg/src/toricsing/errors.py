"""Exception and warning types shared across the package."""


class ToricError(Exception):
    """Base class for all domain errors raised by this package."""


class AlignmentError(ToricError):
    """Polynomial operands do not share a variable table."""


class UnsupportedModelError(ToricError):
    """The model lacks the data (divisor classes, Chern data, radial data)
    required by the requested operation."""


class ModelFormatError(ToricError):
    """Model text is syntactically or semantically invalid.

    Messages carry a line number when the offending line is known.
    """


class NonIsolatedZeroError(ToricError):
    """The local multiplicity computation failed to stabilize, which signals
    a positive-dimensional zero locus at the origin (or a cap set too low)."""


class ToricWarning(UserWarning):
    """Base class for warnings emitted by this package."""


class NotWellFormedWarning(ToricWarning):
    """Weights are not pairwise coprime; orbifold formulas still apply when
    the singularities stay isolated."""


class OrbifoldHypothesisWarning(ToricWarning):
    """An operation stated for smooth models was run on an orbifold model."""
