"""Exception hierarchy shared by the library and the command line front end."""


class ReiswichError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ReiswichError, ValueError):
    """A parameter lies outside the domain where an operation is defined."""


class ParseError(ReiswichError, ValueError):
    """A textual rational or polynomial could not be parsed."""


class TheoremViolation(ReiswichError, AssertionError):
    """Exact computation contradicts a statement that should hold as a theorem."""


class NotSquarefreeError(TheoremViolation):
    """A polynomial expected to have simple roots has a repeated factor."""


class CertificationError(ReiswichError):
    """A decimal expansion cannot be certified at the requested number of digits."""
