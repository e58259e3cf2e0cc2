from radon.exceptions import RadonError


class PAdicError(RadonError):
    pass


class IndeterminateValuationError(PAdicError):
    pass


class PrecisionError(PAdicError):
    pass


class CellOverlapError(PAdicError):
    pass


class ZeroInSupportError(PAdicError):
    pass


class InsufficientConductorError(PAdicError):
    pass


class ShiftValueMismatchError(PAdicError):
    pass


class SupportBoundError(PAdicError):
    pass
