"""Minimal dense 3x3 / 3-vector kernel.

Matrices are numpy float64 arrays of shape (3, 3), row-major; vectors are
shape (3,).  Everything here is a pure function of its inputs, safe for
unrestricted concurrent use.
"""

import math

import numpy as np

from .errors import SingularMatrix

# |det| below this (scaled by the cube of the Frobenius norm) counts as singular.
SINGULAR_DET_TOL = 1e-12


def as_vec3(values) -> np.ndarray:
    """Coerce to a finite float64 3-vector."""
    v = np.asarray(values, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    return v


def as_mat3(values) -> np.ndarray:
    """Coerce to a finite float64 3x3 matrix (row-major)."""
    m = np.asarray(values, dtype=float)
    if m.shape == (9,):
        m = m.reshape(3, 3)
    if m.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product a.b."""
    return a @ b


def det3(m: np.ndarray) -> float:
    """Determinant by cofactor expansion along the first row."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return float(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))


def inverse3(m: np.ndarray) -> np.ndarray:
    """Inverse by adjugate over determinant.

    Raises SingularMatrix when |det| < 1e-12 * max(1, ||m||_F^3).
    """
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    c11 = e * i - f * h
    c12 = -(d * i - f * g)
    c13 = d * h - e * g
    det = a * c11 + b * c12 + c * c13
    scale = max(1.0, float(np.linalg.norm(m)) ** 3)
    if abs(det) < SINGULAR_DET_TOL * scale:
        raise SingularMatrix(f"|det| = {abs(det):.3e} below threshold {SINGULAR_DET_TOL * scale:.3e}")
    adj = np.array([
        [c11, -(b * i - c * h), b * f - c * e],
        [c12, a * i - c * g, -(a * f - c * d)],
        [c13, -(a * h - b * g), a * e - b * d],
    ])
    return adj / det


def cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Right-handed cross product a x b."""
    return np.array([
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ])


def mat_exp(m: np.ndarray) -> np.ndarray:
    """Matrix exponential via scaling and squaring.

    Scales by 2**-s so the scaled Frobenius norm is <= 0.5, sums the Taylor
    series to order 12, then squares s times.  Relative accuracy is about
    1e-12 for ||m||_F <= 10.
    """
    nrm = float(np.linalg.norm(m))
    s = 0 if nrm <= 0.5 else max(0, math.ceil(math.log2(nrm / 0.5)))
    x = m / (2.0 ** s)
    term = np.eye(3)
    acc = np.eye(3)
    for k in range(1, 13):
        term = term @ x / k
        acc = acc + term
    for _ in range(s):
        acc = acc @ acc
    return acc
