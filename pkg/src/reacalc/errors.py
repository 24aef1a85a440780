"""Exception hierarchy shared by all modules."""


class ReaError(Exception):
    """Base class for all errors raised by reacalc."""


class PoleAtPoint(ReaError, ZeroDivisionError):
    pass


class PoleAtOne(PoleAtPoint):
    pass


class ParseError(ReaError, ValueError):
    pass


class PositionOutOfRange(ReaError, IndexError):
    pass


class IndexOutOfRange(ReaError, IndexError):
    pass


class StrandMismatch(ReaError, ValueError):
    pass


class NotSkewInvertible(ReaError):
    pass


class AxiomViolation(ReaError):
    """A constructed symmetry failed one of its defining identities."""


class DegreeBoundExceeded(ReaError):
    """Resource error: an element does not fit under the requested degree bound."""


class InvolutiveUnsupported(ReaError):
    pass


class ZeroSymmetrizer(ReaError):
    pass


class NotPolynomial(ReaError):
    """A rational expression expected to cancel to a polynomial did not."""


class NotInSpan(ReaError):
    pass


class RepresentationCheckFailed(ReaError):
    pass


class NotScalar(ReaError):
    pass


class CharacterMismatch(ReaError):
    pass


class VerificationFailed(ReaError):
    """A postcondition that the construction is supposed to guarantee failed."""
