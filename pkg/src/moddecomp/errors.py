"""Exception hierarchy.

Every error raised deliberately by the library derives from
:class:`ModDecompError`, so callers (the CLI in particular) can map them to
exit codes without catching unrelated bugs.
"""


class ModDecompError(Exception):
    pass


class DomainError(ModDecompError, ValueError):
    """An input lies outside the domain where a formula is valid."""


class NonIntegralGenus(ModDecompError, ArithmeticError):
    """The rational genus formula did not produce an integer (formula bug)."""


class NegativeResidual(ModDecompError, ValueError):
    def __init__(self, index: int, residual: int):
        self.index = index
        self.residual = residual
        super().__init__(
            f"section sequence is not a sum of twisted line bundles: "
            f"residual {residual} at index {index}"
        )


class RankMismatch(ModDecompError, ValueError):
    def __init__(self, expected: int, found: int):
        self.expected = expected
        self.found = found
        super().__init__(f"peeled rank {found}, expected {expected}")


class WeightOneUnknown(ModDecompError, LookupError):
    """A computation needs s_1 for a group not covered by the weight-one table."""


class InvalidSequence(ModDecompError, ValueError):
    def __init__(self, message: str, sequence=None):
        self.sequence = sequence
        super().__init__(message)


class ReconstructionFailure(InvalidSequence):
    pass


class ZeroArgument(ModDecompError, ZeroDivisionError):
    pass


class IntegralityFailure(ModDecompError, ArithmeticError):
    def __init__(self, index: int, value):
        self.index = index
        self.value = value
        super().__init__(f"coefficient {index} is not 2-integral: {value}")


class VerificationFailure(ModDecompError, AssertionError):
    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(f"coefficient {index}: {message}")
