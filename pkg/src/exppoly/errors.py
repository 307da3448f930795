"""Exception hierarchy shared by every module of the package."""


class ExpPolyError(Exception):
    """Base class for all errors raised by exppoly."""


class ContextMismatch(ExpPolyError, ValueError):
    """Two scalars carry different radicands and both use their surd part."""


class NotTranscendental(ExpPolyError, ValueError):
    """The operation needs at least one term with a nonzero exponent."""


class OrderTooHigh(ExpPolyError, ValueError):
    pass


class OrderMismatch(ExpPolyError, ValueError):
    pass


class NotSimple(ExpPolyError, ValueError):
    pass


class NotASolution(ExpPolyError, ValueError):
    pass


class ConstantTermMissing(ExpPolyError, ValueError):
    """The order-below-q part of a solution is not a nonzero constant."""


class LatticeViolation(ExpPolyError, ValueError):
    """A coefficient exponent is not an integer multiple of ``w*z**q``."""


class MultiplierNotPolynomial(ExpPolyError, ValueError):
    pass


class InvalidParameter(ExpPolyError, ValueError):
    pass


class InternalInconsistency(ExpPolyError, RuntimeError):
    """The exact and the floating point routes disagree."""


class CorpusFormatError(ExpPolyError, ValueError):
    pass


class RadicandMismatch(ExpPolyError, ValueError):
    pass


class ParseError(ExpPolyError, ValueError):
    """Malformed expression text; ``span`` holds the offending offsets."""

    def __init__(self, message, span=None, text=None):
        self.span = span
        self.text = text
        if span is not None:
            message = "%s at offset %d" % (message, span.start)
        super().__init__(message)
