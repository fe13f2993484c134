"""Exception types raised on domain-contract violations."""


class GeometryError(ValueError):
    """Base class for all contract violations in this package."""


class BadShape(GeometryError):
    """Input array has the wrong shape (e.g. odd dimension for a symplectic test)."""


class NotSymmetric(GeometryError):
    """Matrix expected to be symmetric is not, beyond tolerance."""


class NotSpd(GeometryError):
    """Matrix expected to be symmetric positive definite is not."""


class NotSymplectic(GeometryError):
    """Matrix fails the symplectic condition M^t J M = J beyond tolerance."""


class NotUnitaryPair(GeometryError):
    """(X, Y) fails the orthogonal-symplectic pair relations."""


class SingularSylvester(GeometryError):
    """The Kronecker-sum system of a Sylvester equation is singular."""


class SingularDenominator(GeometryError):
    """The denominator c v + d of a fractional-linear action is singular.

    For a genuine Siegel point and a symplectic matrix this cannot happen;
    raising it signals an input-contract violation, not a recoverable state.
    """


class ProjectionResidual(GeometryError):
    """A matrix expected to lie in the Jacobi algebra span does not."""


class BasisClosureFailure(GeometryError):
    """A Lie bracket left the span of the algebra basis."""


class ContractionViolation(GeometryError):
    """Ball point violates the bound I - W conj(W) > 0."""
