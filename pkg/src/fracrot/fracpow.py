"""Real matrix powers of well-spectred 3x3 matrices by resolvent quadrature.

The fractional power is evaluated from the integral representation

    A^a = (sin(a pi) / pi) * int_0^inf  l^(a-1) A (l I + A)^(-1) dl,   0 < a < 1,

valid when no eigenvalue of A lies on the closed negative real axis.  The
default discretization maps the half line to (0, 1) via l = s / (1 - s) and
applies a tanh-sinh (double-exponential) rule; composed, the two maps give
exactly l = exp(pi sinh t), which is what the code evaluates, keeping the
scalar factor l^(a-1) in log space so very large and very small l cost no
overflow.  A Gauss-Legendre alternative (split at l = 1, tail inverted by
l -> 1/l, endpoint singularities removed by power substitutions) is kept
behind the config enum for convergence comparisons.

Integrand samples are accumulated in a fixed ascending node order, so a
result at a given level is deterministic and bit-identical across runs.
"""

import cmath
import itertools
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from . import linalg3
from .errors import (
    DegenerateEigenbasis,
    DomainAlpha,
    InadmissibleSpectrum,
    QuadratureNotConverged,
)

DOUBLE_EXPONENTIAL = "double-exponential"
GAUSS_LEGENDRE_SPLIT = "gauss-legendre-split"

# Eigenvalues closer than this to the closed ray (-inf, 0] are inadmissible.
SPECTRUM_MARGIN = 1e-12

# Tail truncation target for the double-exponential rule; the t-range grows
# like 1/min(a, 1-a) so near-endpoint exponents stay accurate.
_TRUNCATION_EXPONENT = 33.0


@dataclass(frozen=True)
class QuadratureConfig:
    """Method, node budget, and tolerance for the power integral.

    level_or_nodes is the tanh-sinh level (step 2**(1-level)) for the
    double-exponential method and the per-panel node count for the
    Gauss-Legendre split.
    """

    method: str = DOUBLE_EXPONENTIAL
    level_or_nodes: int = 7
    abs_tolerance: float = 1e-10

    def __post_init__(self):
        if self.method not in (DOUBLE_EXPONENTIAL, GAUSS_LEGENDRE_SPLIT):
            raise ValueError(f"unknown quadrature method {self.method!r}")
        if self.level_or_nodes < 1:
            raise ValueError("level_or_nodes must be >= 1")
        if not self.abs_tolerance > 0.0:
            raise ValueError("abs_tolerance must be positive")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class SpectrumCheck:
    eigenvalues: tuple[complex, complex, complex]
    admissible: bool


@dataclass(frozen=True)
class QuadratureResult:
    value: np.ndarray
    error_estimate: float
    nodes: int


@dataclass(frozen=True)
class ConvergenceRow:
    level: int
    nodes: int
    error: float


@dataclass(frozen=True)
class ConvergenceReport:
    rows: tuple[ConvergenceRow, ...]

    def __post_init__(self):
        counts = [row.nodes for row in self.rows]
        if any(b <= a for a, b in zip(counts, counts[1:])):
            raise ValueError("node counts must be strictly increasing")


def _cubic_roots(b: float, c: float, d: float) -> tuple[complex, complex, complex]:
    """Roots of x^3 + b x^2 + c x + d by Cardano's formula in complex arithmetic."""
    p = c - b * b / 3.0
    q = 2.0 * b ** 3 / 27.0 - b * c / 3.0 + d
    shift = -b / 3.0
    disc = cmath.sqrt((q / 2.0) ** 2 + (p / 3.0) ** 3)
    # Pick the better-conditioned cube-root branch.
    w1 = -q / 2.0 + disc
    w2 = -q / 2.0 - disc
    w = w1 if abs(w1) >= abs(w2) else w2
    if abs(w) < 1e-300:
        r = shift + 0j
        return (r, r, r)
    u = w ** (1.0 / 3.0)
    v = -p / (3.0 * u)
    omega = complex(-0.5, math.sqrt(3.0) / 2.0)
    return (
        shift + u + v,
        shift + omega * u + omega.conjugate() * v,
        shift + omega.conjugate() * u + omega * v,
    )


def _cubic_roots_hiprec(a: np.ndarray) -> tuple[complex, complex, complex]:
    """Cardano at 60-digit precision with exactly-built cubic coefficients.

    Polynomial roots lose half the working digits near a multiple root, so a
    double eigenvalue solved in double precision lands only ~1e-8 from its
    true spot; at 60 digits the same solve is good to ~1e-25, which the
    1e-12 admissibility margin can trust.
    """
    with mpmath.workdps(60):
        e = [[mpmath.mpf(float(a[i, j])) for j in range(3)] for i in range(3)]
        tr = e[0][0] + e[1][1] + e[2][2]
        minors = (
            e[1][1] * e[2][2] - e[1][2] * e[2][1]
            + e[0][0] * e[2][2] - e[0][2] * e[2][0]
            + e[0][0] * e[1][1] - e[0][1] * e[1][0]
        )
        det = (
            e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
        )
        b, c, d = -tr, minors, -det
        p = c - b * b / 3
        q = 2 * b ** 3 / 27 - b * c / 3 + d
        shift = -b / 3
        disc = mpmath.sqrt(mpmath.mpc(q) ** 2 / 4 + mpmath.mpc(p) ** 3 / 27)
        w1 = -q / 2 + disc
        w2 = -q / 2 - disc
        w = w1 if abs(w1) >= abs(w2) else w2
        if abs(w) == 0:
            r = complex(shift)
            return (r, r, r)
        u = mpmath.power(w, mpmath.mpf(1) / 3)
        v = -p / (3 * u)
        omega = mpmath.mpc(mpmath.mpf(-1) / 2, mpmath.sqrt(3) / 2)
        return (
            complex(shift + u + v),
            complex(shift + omega * u + mpmath.conj(omega) * v),
            complex(shift + mpmath.conj(omega) * u + omega * v),
        )


def check_spectrum(m: np.ndarray) -> SpectrumCheck:
    """Eigenvalues via the closed-form characteristic cubic, plus admissibility.

    Admissible means no eigenvalue within 1e-12 of the closed ray (-inf, 0];
    zero is excluded along with the open negative axis so both the resolvent
    at l = 0 and the principal logarithm exist.
    """
    # Power-of-two scaling is exact, so well-scaled integer matrices keep
    # exact cubic coefficients (a triple root stays a triple root).
    nrm = float(np.linalg.norm(m))
    sigma = 2.0 ** round(math.log2(nrm)) if nrm > 0.0 else 1.0
    a = m / sigma
    tr = float(np.trace(a))
    minors = (
        a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1]
        + a[0, 0] * a[2, 2] - a[0, 2] * a[2, 0]
        + a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    )
    roots = _cubic_roots(-tr, float(minors), -linalg3.det3(a))
    if min(abs(x - y) for x, y in itertools.combinations(roots, 2)) < 1e-2:
        roots = _cubic_roots_hiprec(a)
    eig = tuple(sigma * r for r in roots)
    admissible = all(_ray_distance(z) > SPECTRUM_MARGIN for z in eig)
    return SpectrumCheck(eigenvalues=eig, admissible=admissible)


def _ray_distance(z: complex) -> float:
    """Distance from z to the closed ray (-inf, 0]."""
    if z.real <= 0.0:
        return abs(z.imag)
    return abs(z)


def _de_sums(m: np.ndarray, alpha: float, level: int) -> tuple[np.ndarray, np.ndarray, int]:
    """Trapezoid sums of the transformed integrand at this level and the one below.

    Returns (fine, coarse, node count); the coarse sum reuses the even nodes,
    so both come from a single sweep and the pair yields the level-to-level
    disagreement for free.
    """
    h = 2.0 ** (1 - level)
    y_max = _TRUNCATION_EXPONENT / max(min(alpha, 1.0 - alpha), 1e-300)
    k_max = math.ceil(math.asinh(y_max / math.pi) / h)
    eye = np.eye(3)
    fine = np.zeros((3, 3))
    coarse = np.zeros((3, 3))
    for k in range(-k_max, k_max + 1):
        t = k * h
        y = math.pi * math.sinh(t)  # log(lambda)
        if y >= 0.0:
            core = m @ linalg3.inverse3(eye + math.exp(-y) * m)
            scale = math.exp((alpha - 1.0) * y)
        else:
            core = m @ linalg3.inverse3(math.exp(y) * eye + m)
            scale = math.exp(alpha * y)
        contrib = (math.cosh(t) * scale) * core
        fine += contrib
        if k % 2 == 0:
            coarse += contrib
    pref = math.sin(alpha * math.pi)
    return pref * h * fine, pref * 2.0 * h * coarse, 2 * k_max + 1


def _gl_value(m: np.ndarray, alpha: float, n: int) -> np.ndarray:
    """Gauss-Legendre evaluation with n nodes on each of the two unit panels."""
    x, w = np.polynomial.legendre.leggauss(n)
    u = 0.5 * (x + 1.0)
    wu = 0.5 * w
    eye = np.eye(3)
    acc = np.zeros((3, 3))
    for ui, wi in zip(u, wu):
        lam = ui ** (1.0 / alpha)
        acc += (wi / alpha) * (m @ linalg3.inverse3(lam * eye + m))
        mu = ui ** (1.0 / (1.0 - alpha))
        acc += (wi / (1.0 - alpha)) * (m @ linalg3.inverse3(eye + mu * m))
    return (math.sin(alpha * math.pi) / math.pi) * acc


def quadrature_power(m: np.ndarray, alpha: float, cfg: QuadratureConfig | None = None) -> QuadratureResult:
    """Fractional power for 0 < alpha < 1 with an error estimate.

    The estimate is the Frobenius disagreement between the configured
    resolution and the next-coarser one; if it exceeds cfg.abs_tolerance the
    result is rejected with QuadratureNotConverged.
    """
    cfg = cfg or DEFAULT_CONFIG
    if not 0.0 < alpha < 1.0:
        raise DomainAlpha(f"integral representation needs 0 < alpha < 1, got {alpha!r}")
    if not check_spectrum(m).admissible:
        raise InadmissibleSpectrum("an eigenvalue lies within 1e-12 of the ray (-inf, 0]")
    if cfg.method == DOUBLE_EXPONENTIAL:
        fine, coarse, nodes = _de_sums(m, alpha, cfg.level_or_nodes)
    else:
        n = cfg.level_or_nodes
        fine = _gl_value(m, alpha, n)
        coarse = _gl_value(m, alpha, max(1, n // 2))
        nodes = 2 * n
    estimate = float(np.linalg.norm(fine - coarse))
    if estimate > cfg.abs_tolerance:
        raise QuadratureNotConverged(
            f"level disagreement {estimate:.3e} exceeds tolerance {cfg.abs_tolerance:.3e}"
        )
    return QuadratureResult(value=fine, error_estimate=estimate, nodes=nodes)


def balakrishnan_power(m: np.ndarray, alpha: float, cfg: QuadratureConfig | None = None) -> np.ndarray:
    """Numerical A^alpha from the resolvent integral, 0 < alpha < 1."""
    return quadrature_power(m, alpha, cfg).value


def real_power_detailed(m: np.ndarray, alpha: float, cfg: QuadratureConfig | None = None) -> QuadratureResult:
    """A^alpha for any finite real alpha, with the quadrature error estimate.

    Splits alpha = k + f with integer k and f in [0, 1): whole powers by
    repeated multiplication (the inverse via the adjugate for k < 0), the
    fractional remainder by quadrature.  f == 0 bypasses quadrature entirely,
    so integer exponents are exact products.
    """
    k = math.floor(alpha)
    f = alpha - k
    if f == 1.0:  # alpha a hair below an integer: f rounds up to 1
        k += 1
        f = 0.0
    if f == 0.0:
        frac = QuadratureResult(value=np.eye(3), error_estimate=0.0, nodes=0)
    else:
        frac = quadrature_power(m, f, cfg)
    base = m if k >= 0 else linalg3.inverse3(m)
    ipow = np.eye(3)
    for _ in range(abs(k)):
        ipow = ipow @ base
    return QuadratureResult(
        value=ipow @ frac.value,
        error_estimate=frac.error_estimate,
        nodes=frac.nodes,
    )


def real_power(m: np.ndarray, alpha: float, cfg: QuadratureConfig | None = None) -> np.ndarray:
    """A^alpha for any finite real alpha (integer part exact, remainder by quadrature)."""
    return real_power_detailed(m, alpha, cfg).value


def resolvent_quarter_turn(axis: np.ndarray, lam: float) -> np.ndarray:
    """Closed-form (lam I + A)^(-1) for the quarter turn A about a unit axis.

    The denominator (lam + 1)(lam^2 + 1) is positive for lam >= 0, so the
    formula never degenerates on the integration ray.
    """
    a, b, c = axis
    down = 1.0 - lam
    up = 1.0 + lam
    pref = 1.0 / ((lam + 1.0) * (lam * lam + 1.0))
    return pref * np.array([
        [a * a * down + lam * up, a * b * down + c * up, a * c * down - b * up],
        [a * b * down - c * up, b * b * down + lam * up, b * c * down + a * up],
        [a * c * down + b * up, b * c * down - a * up, c * c * down + lam * up],
    ])


def eig_power_with_residue(m: np.ndarray, alpha: float) -> tuple[np.ndarray, float]:
    """Spectral-decomposition power and the imaginary residue it discarded.

    Computes V diag(w_i^alpha) V^(-1) with principal-branch complex powers.
    Real input with a conjugate spectrum must recombine to a real matrix; the
    leftover imaginary magnitude is returned as a correctness signal and must
    stay below 1e-10.
    """
    if not check_spectrum(m).admissible:
        raise InadmissibleSpectrum("an eigenvalue lies within 1e-12 of the ray (-inf, 0]")
    w, v = np.linalg.eig(m)
    if np.linalg.cond(v) > 1e8:
        raise DegenerateEigenbasis("eigenvector matrix condition exceeds 1e8")
    powered = (v * np.asarray(w, dtype=complex) ** alpha) @ np.linalg.inv(v)
    residue = float(np.abs(np.imag(powered)).max())
    if residue >= 1e-10:
        raise ValueError(f"imaginary residue {residue:.3e} too large; input not a real-spectrum-pair matrix")
    return np.real(powered).copy(), residue


def eig_power_oracle(m: np.ndarray, alpha: float) -> np.ndarray:
    """A^alpha by complex eigendecomposition (reference route, independent of quadrature)."""
    return eig_power_with_residue(m, alpha)[0]


def convergence_study(m: np.ndarray, alpha: float, levels: list[int]) -> ConvergenceReport:
    """Frobenius error of the double-exponential rule per level, against the spectral oracle.

    Levels must be nonempty and strictly increasing.  No convergence gating is
    applied here; coarse levels are reported as-is.
    """
    if not levels:
        raise ValueError("levels must be nonempty")
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise ValueError("levels must be strictly increasing")
    reference = eig_power_oracle(m, alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainAlpha(f"integral representation needs 0 < alpha < 1, got {alpha!r}")
    rows = []
    for level in levels:
        fine, _, nodes = _de_sums(m, alpha, level)
        rows.append(ConvergenceRow(level=level, nodes=nodes, error=float(np.linalg.norm(fine - reference))))
    return ConvergenceReport(rows=tuple(rows))
