"""Exception types shared by the engines and the command line."""


class LefschetzError(ValueError):
    """Base class; ``kind`` is the diagnostic tag used in JSON reports."""

    kind = "error"


class InvalidInputError(LefschetzError):
    kind = "invalid-input"


class NotInvertibleError(LefschetzError):
    kind = "not-invertible"


class NotApplicableError(LefschetzError):
    kind = "not-applicable"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UndefinedValuationError(LefschetzError):
    kind = "undefined-valuation"
