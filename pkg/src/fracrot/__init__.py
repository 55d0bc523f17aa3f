"""Three-dimensional rotations as real matrix powers of the quarter turn.

The closed-form constructions (quarter turn, Rodrigues entries, fractional
powers, generator, semigroup, principal log) live in `rotation`; the
resolvent-integral quadrature engine and its spectral oracle live in
`fracpow`; `linalg3` is the small dense kernel underneath; `verify` holds
the runnable property suites and `cli` the command-line front end.
"""

from . import cli, fracpow, linalg3, rotation, verify
from .errors import (
    DegenerateEigenbasis,
    DomainAlpha,
    FracrotError,
    InadmissibleSpectrum,
    NotARotation,
    OutOfPrincipalDomain,
    QuadratureNotConverged,
    SingularMatrix,
)
from .fracpow import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    balakrishnan_power,
    check_spectrum,
    convergence_study,
    eig_power_oracle,
    real_power,
    resolvent_quarter_turn,
)
from .linalg3 import cross, det3, inverse3, mat_exp, mat_mul
from .rotation import (
    axis_angle_from_matrix,
    frac_power_closed,
    generator,
    interpolate,
    log_rotation,
    quarter_turn,
    rodrigues,
    rotate_vector,
    rotation_of,
    semigroup,
    unit_axis,
)

__version__ = "0.1.0"
