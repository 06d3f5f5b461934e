"""Exception types raised by prodsum."""


class ProdsumError(Exception):
    """Base class for all library errors."""


class InvalidArity(ProdsumError, ValueError):
    pass


class InvalidMinPart(ProdsumError, ValueError):
    pass


class InvalidRepresentation(ProdsumError, ValueError):
    pass


class NotPrime(ProdsumError, ValueError):
    pass


class InadmissibleSpec(ProdsumError, ValueError):
    pass


class UnknownSequence(ProdsumError, KeyError):
    pass


class CheckpointCorrupt(ProdsumError, ValueError):
    pass
