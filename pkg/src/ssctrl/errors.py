"""Exception types shared across the package."""


class SsctrlError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInputError(SsctrlError):
    pass


class RaggedRowsError(SsctrlError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row} has a different length than row 0")


class BadTokenError(SsctrlError):
    def __init__(self, row: int, col: int, token: str):
        self.row = row
        self.col = col
        self.token = token
        super().__init__(f"bad token {token!r} at row {row}, column {col}")


class NotSquareError(SsctrlError):
    pass


class RowMismatchError(SsctrlError):
    pass


class DimensionMismatchError(SsctrlError):
    pass


class WideMatrixRequiredError(SsctrlError):
    """Raised when an operation needs a matrix with at least as many columns as rows."""


class WitnessUnavailableError(SsctrlError):
    pass


class SelfLoopForbiddenError(SsctrlError):
    pass


class UnknownNodeError(SsctrlError):
    pass


class ZeroVectorError(SsctrlError):
    pass


class TooManyFreeEntriesError(SsctrlError):
    pass
