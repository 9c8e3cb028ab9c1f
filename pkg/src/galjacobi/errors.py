"""Exception hierarchy shared by the toolkit."""


class GalJacobiError(Exception):
    """Base class for every error raised by this package."""


class InputError(GalJacobiError, ValueError):
    """Bad parameters, schema violations, or precondition failures."""


class InvalidAutomorphismError(InputError):
    pass


class DomainError(InputError):
    pass


class PrecisionExhaustedError(GalJacobiError):
    """Interval refinement hit the precision cap without isolating a sign."""


class InternalConsistencyError(GalJacobiError):
    """A computed object failed its own exact verification."""


class IndeterminateSignError(GalJacobiError):
    """A sign is requested where no rule determines it (wild or even-inertia place)."""
