class EgstabError(Exception):
    pass


class InvalidInput(EgstabError, ValueError):
    pass


class CapacityExceeded(EgstabError, ValueError):
    pass


class ParseError(EgstabError, ValueError):
    pass


class OutOfDomain(EgstabError, ValueError):
    """Parameters outside the range where a formula or construction is defined."""


class InvalidParameters(OutOfDomain):
    pass
