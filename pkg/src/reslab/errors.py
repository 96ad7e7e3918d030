"""Exception hierarchy shared by all reslab modules."""


class ReslabError(Exception):
    """Base class for all errors raised by this package."""


class ContextMismatchError(ReslabError):
    """Operands belong to different ring contexts (or wrong variable count)."""


class ZeroPolynomialError(ReslabError):
    """An operation that needs a nonzero polynomial received zero."""


class NoRootOfUnityError(ReslabError):
    """The field has no primitive n-th root of unity."""


class PreconditionError(ReslabError):
    """A documented precondition was violated by the caller."""


class NonHomogeneousError(PreconditionError):
    """Graded routines require homogeneous input."""


class ResourceLimitError(ReslabError):
    """A configured resource cap (degree guard, iteration cap, timeout) was hit.

    Containment verdicts interrupted by this error are reported as
    indeterminate, never as containment.
    """


class MacaulaySizeError(ResourceLimitError):
    """The Macaulay matrix would exceed the configured entry limit.

    Raised before any dense allocation so callers can fall back to the
    Groebner route instead of treating the verdict as indeterminate.
    """


class ParseError(ReslabError):
    """Session-text diagnostic with a precise location.

    `expected` lists the token kinds that would have been legal at the
    failure point; `line` and `column` are 1-based.
    """

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        suffix = ""
        if self.expected:
            suffix = " (expected: %s)" % ", ".join(self.expected)
        super().__init__("line %d, column %d: %s%s" % (line, column, message, suffix))
