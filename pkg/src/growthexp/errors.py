"""Exception hierarchy.

Every error raised by the library derives from :class:`GrowthError`.  The three
intermediate classes map onto the CLI exit codes: input problems (2), violated
mathematical invariants (1) and randomized procedures that ran out of retries (3).
"""


class GrowthError(Exception):
    exit_code = 2


class InputError(GrowthError, ValueError):
    exit_code = 2


class InvariantViolation(GrowthError, AssertionError):
    exit_code = 1


class Inconclusive(GrowthError):
    exit_code = 3


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class VariableMismatch(InputError):
    pass


class ArityMismatch(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class NameCollision(InputError):
    pass


class ConstantPolynomial(InputError):
    pass


class NotMonic(InputError):
    pass


class BothConstant(InputError):
    pass


class NotSquarefree(InputError):
    pass


class DenominatorVanishesOnCurve(InputError):
    pass


class NotCHolomorphic(InputError):
    """The pullback P(gamma)/Q(gamma) is not a polynomial in the parameter."""


class ConstantFunction(InputError):
    pass


class AllConstant(InputError):
    pass


class NotInjective(InputError):
    pass


class NoRepresentativeFound(InputError):
    """The numerator degree cap was too small; retry with a larger one."""


class OverflowAtSample(GrowthError, OverflowError):
    exit_code = 2


class NonGenericProjection(Inconclusive):
    pass


class InconclusiveAfterRetries(Inconclusive):
    pass


class ExpressionSyntaxError(InputError):
    """Malformed expression; ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class UnknownVariable(InputError):
    def __init__(self, name, offset=None):
        super().__init__(f"unknown variable {name!r}")
        self.name = name
        self.offset = offset


class InstanceError(InputError):
    pass
