"""Exception types shared across the library."""


class PoleError(ZeroDivisionError):
    """Evaluation was requested at (or numerically on top of) a pole."""


class SingularPointError(ArithmeticError):
    """A phase ratio's denominator fell below the minimum modulus."""


class DegenerateDirectionError(ArithmeticError):
    """The boundary direction makes the convolution kernel singular."""


class InconclusiveError(RuntimeError):
    """Too many sample points had to be skipped for a trustworthy verdict."""


class ConstructionError(RuntimeError):
    """A requested witness function could not be constructed."""


class LogObstructionError(ValueError):
    """Termwise antidifferentiation would produce a logarithm.

    Raised when a series to be antidifferentiated carries a nonzero 1/eta
    term, whose primitive leaves the meromorphic basis.  The offending
    coefficient is stored in ``coefficient``.
    """

    def __init__(self, coefficient: complex):
        self.coefficient = coefficient
        super().__init__(
            f"series has a 1/eta term with coefficient {coefficient!r}; its "
            "antiderivative is logarithmic and has no place in the 1/z-basis "
            "(pick a Schwarz function with zero linear coefficient)"
        )
