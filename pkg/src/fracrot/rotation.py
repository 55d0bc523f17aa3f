"""Closed-form rotation constructions about a fixed unit axis.

The quarter turn about an axis n = (n1, n2, n3) is the anchor matrix; every
other rotation here is expressed either through its real powers or through
the classical axis-angle (Rodrigues) entries, so the two routes can be
checked against each other numerically.

Angles are radians throughout.  All functions are pure and thread-safe.
"""

import math

import numpy as np

from . import linalg3
from .errors import DomainAlpha, NotARotation, OutOfPrincipalDomain

MIN_AXIS_NORM = 1e-9

# Totally antisymmetric Levi-Civita tensor, eps[i,j,k].
_LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _LEVI_CIVITA[_i, _j, _k] = 1.0
    _LEVI_CIVITA[_k, _j, _i] = -1.0


def unit_axis(values) -> np.ndarray:
    """Normalize a 3-vector into a unit rotation axis.

    Raises ValueError for non-finite input or norm below 1e-9.
    """
    v = linalg3.as_vec3(values)
    n = float(np.linalg.norm(v))
    if n < MIN_AXIS_NORM:
        raise ValueError(f"axis norm {n:.3e} below {MIN_AXIS_NORM:.0e}; direction undefined")
    return v / n


def quarter_turn(axis: np.ndarray) -> np.ndarray:
    """Rotation by pi/2 about the unit axis (n1, n2, n3)."""
    n1, n2, n3 = axis
    return np.array([
        [n1 * n1, n1 * n2 - n3, n1 * n3 + n2],
        [n1 * n2 + n3, n2 * n2, n2 * n3 - n1],
        [n1 * n3 - n2, n2 * n3 + n1, n3 * n3],
    ])


def rodrigues(axis: np.ndarray, theta: float) -> np.ndarray:
    """Axis-angle rotation matrix from the Rodrigues entry formula.

    R_ij = cos(theta) d_ij + (1 - cos(theta)) n_i n_j - sin(theta) eps_ijk n_k,
    with d_ij the Kronecker delta and eps_ijk the Levi-Civita symbol.
    """
    c = math.cos(theta)
    s = math.sin(theta)
    return (
        c * np.eye(3)
        + (1.0 - c) * np.outer(axis, axis)
        - s * np.einsum("ijk,k->ij", _LEVI_CIVITA, axis)
    )


def rotate_vector(axis: np.ndarray, theta: float, u: np.ndarray) -> np.ndarray:
    """Rotate u by theta about the axis.

    At theta = pi/2 this agrees with the direct construction
    n x u + <u, n> n to about 1e-13.
    """
    return rodrigues(axis, theta) @ u


def frac_power_closed(axis: np.ndarray, alpha: float) -> np.ndarray:
    """Closed-form real power A^alpha of the quarter turn, |alpha| <= 1.

    Entries coincide with the Rodrigues entries at angle alpha*pi/2; the
    negative-exponent case uses the sign-flipped closed form rather than a
    transpose (the transpose identity is a test, not an assumption).
    """
    if not -1.0 <= alpha <= 1.0:
        raise DomainAlpha(f"closed form covers |alpha| <= 1, got {alpha!r}")
    a = abs(alpha)
    c = math.cos(a * math.pi / 2.0)
    s = math.sin(a * math.pi / 2.0)
    n1, n2, n3 = axis
    q = 1.0 - c
    if alpha >= 0.0:
        return np.array([
            [n1 * n1 * q + c, n1 * n2 * q - n3 * s, n1 * n3 * q + n2 * s],
            [n1 * n2 * q + n3 * s, n2 * n2 * q + c, n2 * n3 * q - n1 * s],
            [n1 * n3 * q - n2 * s, n2 * n3 * q + n1 * s, n3 * n3 * q + c],
        ])
    return np.array([
        [n1 * n1 * q + c, n1 * n2 * q + n3 * s, n1 * n3 * q - n2 * s],
        [n1 * n2 * q - n3 * s, n2 * n2 * q + c, n2 * n3 * q + n1 * s],
        [n1 * n3 * q + n2 * s, n2 * n3 * q - n1 * s, n3 * n3 * q + c],
    ])


def rotation_of(axis: np.ndarray, theta: float) -> np.ndarray:
    """Rotation by any real theta as the 2*theta/pi power of the quarter turn.

    Splits the exponent into integer + fractional parts: whole quarter turns
    by repeated multiplication (transpose for the inverse turn), the
    remainder by the closed-form fractional power.
    """
    alpha = 2.0 * theta / math.pi
    m = math.floor(alpha)
    f = alpha - m
    base = quarter_turn(axis)
    if m < 0:
        base = base.T
    p = np.eye(3)
    for _ in range(abs(m)):
        p = p @ base
    return p @ frac_power_closed(axis, f)


def generator(axis: np.ndarray) -> np.ndarray:
    """Skew-symmetric generator G with G u = n x u and rotation_of = exp(theta G)."""
    n1, n2, n3 = axis
    return np.array([
        [0.0, -n3, n2],
        [n3, 0.0, -n1],
        [-n2, n1, 0.0],
    ])


def log_rotation(axis: np.ndarray, theta: float) -> np.ndarray:
    """Principal logarithm of rotation_of(axis, theta), equal to theta * G.

    Only defined for |theta| < pi: a half turn has eigenvalue -1, which sits
    on the principal branch cut.
    """
    if abs(theta) >= math.pi - 1e-9:
        raise OutOfPrincipalDomain(f"|theta| = {abs(theta)!r} >= pi; principal log undefined")
    return theta * generator(axis)


def semigroup(axis: np.ndarray, t: float) -> np.ndarray:
    """Explicit matrix of T(t) = exp(t * quarter_turn(axis)).

    Scales the axis direction by e^t and rotates the orthogonal plane by t.
    Stated for t >= 0; the entries are entire in t, so negative t is accepted
    as a documented extension.
    """
    n1, n2, n3 = axis
    q = math.exp(t) - math.cos(t)
    c = math.cos(t)
    s = math.sin(t)
    return np.array([
        [n1 * n1 * q + c, n1 * n2 * q - n3 * s, n1 * n3 * q + n2 * s],
        [n1 * n2 * q + n3 * s, n2 * n2 * q + c, n2 * n3 * q - n1 * s],
        [n1 * n3 * q - n2 * s, n2 * n3 * q + n1 * s, n3 * n3 * q + c],
    ])


def is_rotation(m: np.ndarray, tol: float = 1e-11) -> bool:
    """True when m is orthogonal with determinant 1 to within tol."""
    return (
        float(np.abs(m.T @ m - np.eye(3)).max()) <= tol
        and abs(linalg3.det3(m) - 1.0) <= tol
    )


def axis_angle_from_matrix(r: np.ndarray) -> tuple[np.ndarray, float]:
    """Recover (unit axis, angle in [0, pi]) from a rotation matrix.

    Away from the half turn the axis comes from the skew part; near theta = pi
    the skew part vanishes and the axis is rebuilt from the diagonal with the
    largest component as sign pivot.  The identity reports axis (0, 0, 1) by
    convention.  Raises NotARotation if m is not orthogonal with det 1 to 1e-8.
    """
    if not is_rotation(r, tol=1e-8):
        raise NotARotation("input is not orthogonal with unit determinant to 1e-8")
    c = min(1.0, max(-1.0, (float(np.trace(r)) - 1.0) / 2.0))
    theta = math.acos(c)
    if theta < 1e-9:
        return np.array([0.0, 0.0, 1.0]), theta
    s = math.sin(theta)
    if s > 1e-6:
        n = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]]) / (2.0 * s)
        return n / np.linalg.norm(n), theta
    sq = np.clip((np.diag(r) - c) / (1.0 - c), 0.0, None)
    k = int(np.argmax(sq))
    n = np.zeros(3)
    n[k] = math.sqrt(sq[k])
    for j in range(3):
        if j != k:
            n[j] = (r[k, j] + r[j, k]) / (2.0 * (1.0 - c) * n[k])
    n /= np.linalg.norm(n)
    # The diagonal fixes n only up to overall sign; just below a half turn the
    # residual skew part still carries the true orientation.
    skew = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
    if float(np.dot(n, skew)) < 0.0:
        n = -n
    return n, theta


def interpolate(axis: np.ndarray, theta0: float, theta1: float, steps: int) -> list[np.ndarray]:
    """Rotations at steps+1 equally spaced angles from theta0 to theta1."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    return [
        rotation_of(axis, theta0 + k * (theta1 - theta0) / steps)
        for k in range(steps + 1)
    ]
