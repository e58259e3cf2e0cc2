from radon.exceptions import RadonError


class ArchimedeanError(RadonError):
    pass


class PoleError(ArchimedeanError):
    pass


class JetOrderError(ArchimedeanError):
    pass


class DomainError(ArchimedeanError):
    pass
