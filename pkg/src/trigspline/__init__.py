"""Parameterised trigonometric interpolation splines on uniform periodic grids."""
from .errors import (
    ConfigError,
    EvenNError,
    GridMismatchError,
    InputError,
    LengthMismatchError,
    NonFiniteValueError,
    RequiresSmoothnessError,
    SingularFactorError,
    TailNotConvergedError,
    TooSmallError,
    TrigSplineError,
    TruncationWarning,
    ZeroShapeVectorError,
)
from .fourier import TrigCoeffs, dft_coefficients, eval_trig_polynomial, trig_polynomial_power
from .grids import Grid, SampleSet, make_grid, sample_function, sample_values
from .kernels import (
    CustomFactor,
    ShapeVector,
    SincPower,
    TruncationPolicy,
    basis_C,
    basis_S,
    convergence_factor,
    interp_factor_hc,
    interp_factor_hs,
)
from .spline import (
    PowerReport,
    Spline,
    SplineConfig,
    build_spline,
    eval_spline,
    eval_spline_batch,
    eval_spline_derivative,
    make_config,
    parseval_power,
)

EXAMPLE_DATA = (3.0, 1.0, 3.0, 2.0, 4.0, 1.0, 3.0, 1.0, 2.0)
EXAMPLE_GAMMA = (-0.5, 1.5, -0.7)
EXAMPLE_ETA = (0.3, -0.7, -1.5)

__version__ = "0.1.0"
