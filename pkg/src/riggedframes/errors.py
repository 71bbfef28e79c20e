"""Exception hierarchy.

All library errors derive from :class:`RiggedFrameError` so callers can
distinguish library failures from built-in errors. Validation problems
(bad shapes, bad parameters) are ``ValueError`` subclasses; numerical
failures (non-convergence) are ``RuntimeError`` subclasses.
"""


class RiggedFrameError(Exception):
    """Base class for all errors raised by this package."""


class DimMismatch(RiggedFrameError, ValueError):
    """Operands have incompatible dimensions or lengths."""


class NotHermitian(RiggedFrameError, ValueError):
    """A matrix required to be Hermitian is not, beyond tolerance."""


class NoConvergence(RiggedFrameError, RuntimeError):
    """An iterative eigensolver did not reach its target accuracy."""


class OrderOutOfRange(RiggedFrameError, ValueError):
    """Seminorm order outside the range carried by the weight family."""


class BadInterval(RiggedFrameError, ValueError):
    """Invalid quadrature interval or node count."""


class BadParams(RiggedFrameError, ValueError):
    """Invalid parameters for a built-in example system."""


class CertificateUnstable(RiggedFrameError, RuntimeError):
    """No seminorm order passes the dimension-family growth test."""


class NotTotal(RiggedFrameError, ValueError):
    """Operation requires a total map but the map is rank deficient."""


class NotAFrame(RiggedFrameError, ValueError):
    """Operation requires a frame but the lower frame bound vanishes."""
