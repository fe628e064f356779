"""Exception hierarchy shared by every module."""


class SchedError(Exception):
    """Base class for all errors raised by revokesched."""


class InvalidTimeError(SchedError, ValueError):
    pass


class InputError(SchedError, ValueError):
    """Malformed or inconsistent user-supplied data."""


class ConstructionError(SchedError, ValueError):
    """A nested adversary job cannot be built from the given window."""


class CapacityError(SchedError):
    """Instance too large for an exponential solver."""


class PolicyError(SchedError):
    """A policy asked for an action the machine cannot perform."""


class SourceError(SchedError):
    """A job source broke the real-time release order."""
