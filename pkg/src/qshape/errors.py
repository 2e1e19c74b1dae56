"""Exception types shared across the package."""


class QShapeError(Exception):
    """Base class for domain errors raised by this package."""


class VerificationFailed(QShapeError):
    """A post-hoc consistency check failed (e.g. nilpotency bound too small)."""


class NonHomogeneousRelation(QShapeError):
    """A quiver relation mixes degrees or is not composable."""


class UnknownFamily(QShapeError):
    """Unrecognized builtin algebra family name."""


class UnsupportedCharacteristic(QShapeError):
    """No valid radical method for this field characteristic."""


class NonSplitSemisimpleQuotient(QShapeError):
    """The semisimple quotient does not visibly split over the base field."""


class MissingIdempotents(QShapeError):
    """Operation needs a complete set of primitive orthogonal idempotents."""


class NotNonNegativelyGraded(QShapeError):
    """Operation requires the algebra to live in non-negative degrees."""


class NotSelfInjective(QShapeError):
    """Operation requires a self-injective algebra."""


class HypothesisViolated(QShapeError):
    """One of the standing hypotheses on the input algebra fails."""

    def __init__(self, which, message=None):
        self.which = which
        super().__init__(message or f"hypothesis violated: {which}")
