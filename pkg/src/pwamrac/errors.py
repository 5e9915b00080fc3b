"""Exception types shared across the package."""


class PwamracError(Exception):
    """Base class for all package errors."""


class PartitionDefectError(PwamracError):
    """A state is claimed by no region, or validation found cover/overlap defects."""


class CertificateError(PwamracError):
    """Quadratic certificate is invalid or could not be established."""


class NotHurwitzError(CertificateError):
    """Matrix has an eigenvalue with nonnegative real part."""


class ScenarioError(PwamracError):
    """Scenario file is malformed or fails validation."""


class DivergenceError(PwamracError):
    """State became nonfinite during integration.

    Carries the partial result up to the last finite state.
    """

    def __init__(self, message, partial_result=None):
        super().__init__(message)
        self.partial_result = partial_result


class ReferenceSlidingError(PwamracError):
    """The reference model hit an attracting switching surface.

    The control strategy requires a reference model that does not slide.
    """


class UnsupportedSlidingError(PwamracError):
    """Sliding reached an intersection of two or more switching surfaces."""


class DegenerateContactError(PwamracError):
    """Both one-sided vector fields are tangent to the switching surface."""
