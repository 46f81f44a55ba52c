"""Exception types raised by the counting engines."""


class DiophantineError(ValueError):
    """Base class for invalid input to any engine."""


class WrongArity(DiophantineError):
    pass


class NegativeRHS(DiophantineError):
    pass


class OddInput(DiophantineError):
    pass


class EvenInput(DiophantineError):
    pass


class DomainError(DiophantineError):
    pass


class InconsistentTag(DiophantineError):
    pass


class ResidueError(DiophantineError):
    pass


class NoSolution(DiophantineError):
    pass


class CapacityError(RuntimeError):
    """The dense budget table would exceed the configured cell cap."""


class TranscriptionError(AssertionError):
    """A closed form failed an exactness check.

    Raised when a polynomial numerator is not divisible by its denominator,
    or when a programmed sum disagrees with the polynomial it should equal.
    Either means a formula was transcribed wrongly.
    """
