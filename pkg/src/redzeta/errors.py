"""Exception hierarchy shared by every module."""


class RedZetaError(Exception):
    """Base class for all errors raised by this package."""


class MalformedAlgebraError(RedZetaError, ValueError):
    """Structure constants or basis names are inconsistent."""


class AlgebraFileError(MalformedAlgebraError):
    """Syntax error in an algebra file; carries a line/column position."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        loc = ""
        if source is not None:
            loc += f"{source}:"
        if line is not None:
            loc += f"{line}:"
            if column is not None:
                loc += f"{column}:"
        super().__init__(f"{loc} {message}" if loc else message)
        self.message = message


class NotSimpleError(RedZetaError):
    """Some bracket of basis vectors has more than one nonzero coordinate."""

    def __init__(self, pairs):
        self.pairs = tuple(pairs)
        super().__init__(f"basis is not simple; offending pairs: {list(self.pairs)}")


class NotNilpotentError(RedZetaError):
    """The upper central series stabilises below the whole algebra."""


class UnsupportedQuotientError(RedZetaError):
    """The ideal generated by a set of basis vectors is not spanned by basis vectors."""


class PrecCycleError(RedZetaError):
    """The bracket-target relation contains a cycle."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"cycle in bracket-target order: {' -> '.join(map(str, self.cycle))}")


class NotCertifiedError(RedZetaError):
    """Niceness could not be certified via removable pairs."""

    def __init__(self, pairs):
        self.pairs = tuple(pairs)
        super().__init__(f"basis not certified nice; non-removable pairs: {list(self.pairs)}")


class NotExpandableError(RedZetaError):
    """Power series expansion requested at a pole."""


class ResourceLimitError(RedZetaError):
    """Omega elimination exceeded the configured term ceiling."""


class PreconditionError(RedZetaError):
    """A theorem-level check could not establish its preconditions."""


class OmegaInvariantError(RedZetaError, AssertionError):
    """Internal invariant of the Omega elimination was violated."""
