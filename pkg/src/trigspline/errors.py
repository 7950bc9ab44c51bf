"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class TrigSplineError(Exception):
    pass


class InputError(TrigSplineError, ValueError):
    """Bad sample data (wrong length, NaN/inf, unparsable file)."""


class ConfigError(TrigSplineError, ValueError):
    """Parameter combination that violates a construction invariant."""


class EvenNError(ConfigError):
    pass


class TooSmallError(ConfigError):
    pass


class LengthMismatchError(InputError):
    pass


class NonFiniteValueError(InputError):
    pass


class GridMismatchError(ConfigError):
    pass


class ZeroShapeVectorError(ConfigError):
    pass


class RequiresSmoothnessError(ConfigError):
    """Closed-form power requested for r = 0, where the series is not uniformly convergent."""


class SingularFactorError(TrigSplineError, ArithmeticError):
    def __init__(self, which, k, value):
        self.which = which
        self.k = k
        self.value = value
        super().__init__(f"interpolation factor {which}_{k} = {value!r} is numerically zero")


class TailNotConvergedError(TrigSplineError, ArithmeticError):
    def __init__(self, msg, k=None, bound=None):
        self.k = k
        self.bound = bound
        super().__init__(msg)


class TruncationWarning(UserWarning):
    """Alias sums were capped without a certified tail bound."""
