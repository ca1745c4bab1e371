"""Exception types shared across the package."""


class ArtifactError(Exception):
    """Base class for all errors raised by this package."""


class EmptyBoxError(ArtifactError):
    """Degenerate search box for the integer identity solver."""


class InvalidParameterError(ArtifactError):
    """An argument violates a documented precondition."""


class RingMismatchError(ArtifactError):
    """Operands live in different intersection rings."""


class DegreeMismatchError(ArtifactError):
    """A cycle class has the wrong graded degree."""


class UnsupportedRankError(ArtifactError):
    """Bundle rank outside the range the closed-form calculus supports."""


class NonInvertibleError(ArtifactError):
    """Total Chern class cannot be inverted (degree-0 part is not 1)."""


class CapExceededError(ArtifactError):
    """Group closure did not terminate within the element cap."""


class RankTooHighError(ArtifactError):
    """Pencil has generic rank above the supported bound."""


class RankMismatchError(ArtifactError):
    """Pencil does not have the generic rank an operation requires."""


class InconsistentError(ArtifactError):
    """No feasible assignment exists (exact sequence or section data)."""


class SolverError(ArtifactError):
    """The double-structure solver found no solution or several."""


class UnknownClaimError(ArtifactError):
    """A claim id passed on the command line is not registered."""


class PencilParseError(ArtifactError):
    """Malformed pencil input file."""
