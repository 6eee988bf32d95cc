"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 2 for invalid input or
violated preconditions, 3 for numerical non-convergence.
"""


class PolysurfError(Exception):
    exit_code = 2


class ValidationError(PolysurfError, ValueError):
    exit_code = 2


class NumericalError(PolysurfError, ArithmeticError):
    exit_code = 3


# complex construction
class DuplicateSlot(ValidationError):
    pass


class SelfPairedSlot(ValidationError):
    pass


class BadSideCount(ValidationError):
    pass


class UnknownSlot(ValidationError):
    pass


class BadVertexType(ValidationError):
    pass


class NonOrientable(ValidationError):
    pass


class HasBoundary(ValidationError):
    pass


# curvature / catalog
class EmptyProfile(ValidationError):
    pass


class NonPositiveC0(ValidationError):
    pass


class UnboundedQuery(ValidationError):
    pass


class EmptyCatalog(ValidationError):
    pass


# cover
class LimitTooSmall(ValidationError):
    pass


class MismatchedBase(ValidationError):
    pass


class DevelopmentError(PolysurfError):
    """Internal inconsistency while developing a cover (indicates a bug)."""


# spherical / metric
class RadiusTooSmall(ValidationError):
    pass


class BadN(ValidationError):
    pass


class NotPositivelyCurved(ValidationError):
    pass


class NonConvergence(NumericalError):
    pass


class MeshTooFine(ValidationError):
    pass


class Disconnected(PolysurfError):
    pass


class HypothesisViolated(ValidationError):
    pass


# isoperimetric
class EmptySelection(ValidationError):
    pass


class ClosedSelection(ValidationError):
    pass


class BallTouchesBoundary(ValidationError):
    pass


# generators
class UnknownFamily(ValidationError):
    pass


class BadParameters(ValidationError):
    pass


# io
class PscSyntaxError(ValidationError):
    pass


class SchemaError(ValidationError):
    pass


class NotPlanar(ValidationError):
    pass


class LayoutDegenerate(ValidationError):
    pass
