"""Exception hierarchy shared by every module.

All errors derive from :class:`CurveConfigError`, which is itself a
``ValueError`` so callers that only care about bad input can catch that.
"""


class CurveConfigError(ValueError):
    """Base class for all package errors."""


class InvalidConfiguration(CurveConfigError):
    """A configuration violates a structural invariant (bad degree, counts, ...)."""


class IdentityFailure(CurveConfigError):
    """The combinatorial identity does not hold, so the datum is not validated."""


class InvalidArgument(CurveConfigError):
    pass


class NoSingularPoints(CurveConfigError):
    pass


class UnsupportedDegree(CurveConfigError):
    pass


class DegenerateIntersection(CurveConfigError):
    pass


class DuplicateLines(CurveConfigError):
    pass


class GenerationFailure(CurveConfigError):
    pass


class PrecisionExhausted(CurveConfigError):
    pass


class DomainError(CurveConfigError):
    """Family parameter outside the admissible domain."""


class UnknownFamily(CurveConfigError):
    pass


class NoLimit(CurveConfigError):
    """A limit does not exist or depends on the residue class of the parameter."""


class Unsupported(CurveConfigError):
    pass


class PencilError(CurveConfigError):
    """All curves pass through a common point (t_k != 0)."""


class SizeError(CurveConfigError):
    pass


class InvalidSurface(CurveConfigError):
    """The second Chern number is not positive at the requested n."""


class UndefinedGamma(CurveConfigError):
    pass


class ConditionMismatch(CurveConfigError):
    """A general-type condition was requested that the spectrum does not satisfy."""


class OutOfRange(CurveConfigError):
    pass


class WrongChecker(CurveConfigError):
    pass
