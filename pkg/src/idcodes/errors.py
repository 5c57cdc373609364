"""Exception hierarchy shared by every idcodes module."""


class IdCodesError(ValueError):
    """Base class for all library errors."""


class RadicesMismatchError(IdCodesError):
    """Two objects that must share radices do not."""


class ScopeError(IdCodesError):
    """An operation was asked to work outside the hypotheses it is valid for."""


class CapExceededError(IdCodesError):
    """An exhaustive routine would exceed its configured size cap."""


class FormatError(IdCodesError):
    """A code file or matrix file could not be parsed."""
