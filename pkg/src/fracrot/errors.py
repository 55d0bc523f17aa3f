"""Exception types raised by the fracrot kernels and engines."""


class FracrotError(Exception):
    """Base class for all domain errors (CLI maps these to exit code 3)."""


class SingularMatrix(FracrotError):
    """Determinant too close to zero for a reliable 3x3 inverse."""


class DomainAlpha(FracrotError):
    """Exponent outside the domain of the requested power routine."""


class InadmissibleSpectrum(FracrotError):
    """An eigenvalue lies on (or within 1e-12 of) the closed ray (-inf, 0]."""


class QuadratureNotConverged(FracrotError):
    """Successive-level disagreement exceeded the configured tolerance."""


class DegenerateEigenbasis(FracrotError):
    """Eigenvector matrix too ill-conditioned for the spectral oracle."""


class OutOfPrincipalDomain(FracrotError):
    """Rotation angle with |theta| >= pi has no principal logarithm."""


class NotARotation(FracrotError):
    """Matrix violates orthogonality / unit-determinant beyond tolerance."""
