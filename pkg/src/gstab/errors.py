"""Exception hierarchy shared across the package.

Every failure mode the CLI distinguishes by exit code has its own class
here, so library users can catch precisely what they care about.
"""


class GstabError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(GstabError):
    """Malformed input file or value (bad JSON, bad edge list, ...)."""


class NotPerfectError(GstabError):
    """An operation that requires a perfect graph received one that is not."""


class SizeGuardError(GstabError):
    """Input exceeds a configured size limit for an exponential-time step."""


class ParameterError(GstabError):
    """Family parameters outside their admissible range."""


class InconclusiveError(GstabError):
    """A bounded generator search exhausted its degree window without
    stabilizing.  Callers must not treat this as a negative answer."""
