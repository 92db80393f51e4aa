"""Exception hierarchy.

:class:`InputError` subclasses are user mistakes (CLI exit 1);
:class:`InvariantError` subclasses mean an internal computation went
wrong (CLI exit 2).
"""


class LogDerhamError(Exception):
    pass


class InputError(LogDerhamError, ValueError):
    pass


class InvariantError(LogDerhamError, ArithmeticError):
    pass


class MismatchedArity(InputError):
    pass


class NotReduced(InputError):
    pass


class ZeroForm(InputError):
    pass


class EmptyArrangement(InputError):
    pass


class DegreeLimitExceeded(InputError):
    pass


class NonDivisible(InvariantError):
    """Raised by exact division; carries the nonzero remainder."""

    def __init__(self, remainder):
        super().__init__(f"not divisible, remainder {remainder!r}")
        self.remainder = remainder


class Inconsistent(InvariantError):
    pass


class NotEssentialCenter(UserWarning):
    """The maximal flat is not the origin; case split falls back."""
