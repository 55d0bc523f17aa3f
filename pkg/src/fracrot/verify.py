"""Numerical property suites behind the `fracrot verify` command.

Each check measures a worst-case error over a fixed, seeded desk-scale grid
and reports it under a stable name; the CLI compares the measurements
against a single user tolerance.  Checks call into the library through
module attributes so a deliberately corrupted function is caught by the
suite (mutation smoke testing).
"""

import math
from dataclasses import dataclass

import numpy as np

from . import fracpow, linalg3, rotation
from .errors import FracrotError

SUITES = ("all", "rotation", "fracpow")

_fro = np.linalg.norm


@dataclass(frozen=True)
class PropertyResult:
    name: str
    max_error: float


def axis_grid(n_random: int = 8, seed: int = 1234) -> list[np.ndarray]:
    """Coordinate axes, face and body diagonals, plus seeded random unit axes."""
    axes = [
        (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0),
        (1.0, 1.0, 0.0), (0.0, 1.0, 1.0), (1.0, 0.0, 1.0),
        (1.0, 1.0, 1.0), (1.0, -1.0, 1.0), (-1.0, 1.0, 1.0),
    ]
    rng = np.random.default_rng(seed)
    out = [rotation.unit_axis(a) for a in axes]
    for _ in range(n_random):
        out.append(rotation.unit_axis(rng.normal(size=3)))
    return out


def _unit_vectors(count: int, seed: int) -> list[np.ndarray]:
    rng = np.random.default_rng(seed)
    return [rotation.unit_axis(rng.normal(size=3)) for _ in range(count)]


# --------------------------------------------------------------------------
# rotation suite
# --------------------------------------------------------------------------

def _closed_power_matches_rodrigues(axes) -> PropertyResult:
    # Sweep both closed-form displays: alpha in [-1, 1].
    worst = 0.0
    for ax in axes:
        for k in range(-32, 33):
            a = k / 32.0
            diff = rotation.frac_power_closed(ax, a) - rotation.rodrigues(ax, a * math.pi / 2.0)
            worst = max(worst, float(_fro(diff)))
    return PropertyResult("closed_power_matches_rodrigues", worst)


def _full_range_matches_rodrigues(axes) -> PropertyResult:
    worst = 0.0
    thetas = [k * math.pi / 16.0 for k in range(-64, 65)]
    for ax in axes:
        for th in thetas:
            diff = rotation.rotation_of(ax, th) - rotation.rodrigues(ax, th)
            worst = max(worst, float(_fro(diff)))
    return PropertyResult("full_range_matches_rodrigues", worst)


def _group_law(axes) -> PropertyResult:
    rng = np.random.default_rng(7)
    pairs = rng.uniform(-2.0 * math.pi, 2.0 * math.pi, size=(40, 2))
    worst = 0.0
    for ax in axes[:5]:
        for t1, t2 in pairs:
            lhs = rotation.rotation_of(ax, t1) @ rotation.rotation_of(ax, t2)
            worst = max(worst, float(_fro(lhs - rotation.rotation_of(ax, t1 + t2))))
    return PropertyResult("group_law", worst)


def _orthogonality_and_axis(axes) -> list[PropertyResult]:
    worst_orth = 0.0
    worst_axis = 0.0
    worst_trace = 0.0
    thetas = [k * math.pi / 8.0 + 0.05 for k in range(-16, 17)]
    eye = np.eye(3)
    for ax in axes:
        for th in thetas:
            r = rotation.rotation_of(ax, th)
            worst_orth = max(
                worst_orth,
                float(np.abs(r.T @ r - eye).max()),
                abs(linalg3.det3(r) - 1.0),
            )
            worst_axis = max(worst_axis, float(_fro(r @ ax - ax)))
            worst_trace = max(worst_trace, abs(float(np.trace(r)) - (1.0 + 2.0 * math.cos(th))))
    return [
        PropertyResult("orthogonality_and_determinant", worst_orth),
        PropertyResult("axis_is_fixed", worst_axis),
        PropertyResult("trace_identity", worst_trace),
    ]


def _generator_difference_quotient(axes) -> PropertyResult:
    # Difference quotients obey ||(A(h)u - u)/h - Gu|| <= h; report the excess.
    us = _unit_vectors(10, seed=11)
    worst = 0.0
    for ax in axes[:5]:
        g = rotation.generator(ax)
        for u in us:
            for h in (1e-2, 1e-3, 1e-4, 1e-5, 1e-6):
                quotient = (rotation.rotation_of(ax, h) @ u - u) / h
                excess = float(_fro(quotient - g @ u)) - h
                worst = max(worst, max(0.0, excess))
    return PropertyResult("generator_difference_quotient", worst)


def _exp_generator_matches(axes) -> PropertyResult:
    worst = 0.0
    for ax in axes[:7]:
        g = rotation.generator(ax)
        for th in np.linspace(-5.0, 5.0, 21):
            diff = linalg3.mat_exp(th * g) - rotation.rotation_of(ax, float(th))
            worst = max(worst, float(_fro(diff)))
    return PropertyResult("exp_generator_matches_rotation", worst)


def _semigroup_matches_exponential(axes) -> PropertyResult:
    worst = 0.0
    for ax in axes[:7]:
        q = rotation.quarter_turn(ax)
        for t in np.linspace(-5.0, 5.0, 21):
            diff = rotation.semigroup(ax, float(t)) - linalg3.mat_exp(float(t) * q)
            worst = max(worst, float(_fro(diff)))
    return PropertyResult("semigroup_matches_exponential", worst)


def _quarter_turn_vector_formula(axes) -> PropertyResult:
    us = _unit_vectors(10, seed=23)
    worst = 0.0
    for ax in axes:
        for u in us:
            direct = linalg3.cross(ax, u) + float(np.dot(u, ax)) * ax
            turned = rotation.rotate_vector(ax, math.pi / 2.0, u)
            worst = max(worst, float(_fro(turned - direct)))
    return PropertyResult("quarter_turn_vector_formula", worst)


def _axis_angle_round_trip(axes) -> PropertyResult:
    worst = 0.0
    thetas = [0.15, 0.5, 1.0, 1.8, 2.6, 3.0, -0.5, -1.8, -3.0]
    for ax in axes[:7]:
        for th in thetas:
            r = rotation.rotation_of(ax, th)
            back_axis, back_theta = rotation.axis_angle_from_matrix(r)
            expect_axis = ax if th > 0 else -ax
            worst = max(
                worst,
                abs(back_theta - abs(th)),
                float(_fro(back_axis - expect_axis)),
                float(_fro(rotation.rodrigues(back_axis, back_theta) - r)),
            )
    return PropertyResult("axis_angle_round_trip", worst)


_ROTATION_CHECKS = [
    (("closed_power_matches_rodrigues",), _closed_power_matches_rodrigues),
    (("full_range_matches_rodrigues",), _full_range_matches_rodrigues),
    (("group_law",), _group_law),
    (("orthogonality_and_determinant", "axis_is_fixed", "trace_identity"), _orthogonality_and_axis),
    (("generator_difference_quotient",), _generator_difference_quotient),
    (("exp_generator_matches_rotation",), _exp_generator_matches),
    (("semigroup_matches_exponential",), _semigroup_matches_exponential),
    (("quarter_turn_vector_formula",), _quarter_turn_vector_formula),
    (("axis_angle_round_trip",), _axis_angle_round_trip),
]


def _run_checks(checks, axes) -> list[PropertyResult]:
    # A check that raises a domain error is a failed property, not a crash.
    results = []
    for names, fn in checks:
        try:
            got = fn(axes)
            results.extend(got if isinstance(got, list) else [got])
        except FracrotError:
            results.extend(PropertyResult(name, math.inf) for name in names)
    return results


def rotation_properties() -> list[PropertyResult]:
    return _run_checks(_ROTATION_CHECKS, axis_grid(n_random=2))


# --------------------------------------------------------------------------
# fracpow suite
# --------------------------------------------------------------------------

def _engine_agreement(axes) -> list[PropertyResult]:
    worst_closed = 0.0
    worst_three_way = 0.0
    for ax in axes[:5]:
        q = rotation.quarter_turn(ax)
        for a in (0.1, 0.25, 0.5, 0.75, 0.9):
            engine = fracpow.balakrishnan_power(q, a)
            oracle = fracpow.eig_power_oracle(q, a)
            closed = rotation.frac_power_closed(ax, a)
            worst_closed = max(worst_closed, float(_fro(engine - closed)))
            worst_three_way = max(
                worst_three_way,
                float(_fro(engine - closed)),
                float(_fro(engine - oracle)),
                float(_fro(oracle - closed)),
            )
    return [
        PropertyResult("engine_matches_closed_form", worst_closed),
        PropertyResult("three_way_agreement", worst_three_way),
    ]


def _exponent_addition(axes) -> PropertyResult:
    worst = 0.0
    grid = (-1.5, -0.5, 0.75, 2.0)
    for ax in axes[:2]:
        q = rotation.quarter_turn(ax)
        for a in grid:
            for b in grid:
                lhs = fracpow.real_power(q, a) @ fracpow.real_power(q, b)
                worst = max(worst, float(_fro(lhs - fracpow.real_power(q, a + b))))
    return PropertyResult("exponent_addition", worst)


def _power_composition(axes) -> PropertyResult:
    worst = 0.0
    for ax in axes[:2]:
        q = rotation.quarter_turn(ax)
        for a in (0.25, 0.5, 0.75):
            inner = fracpow.real_power(q, a)
            for b in (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 1.0 / 3.0):
                lhs = fracpow.real_power(inner, b)
                worst = max(worst, float(_fro(lhs - fracpow.real_power(q, a * b))))
    return PropertyResult("power_composition", worst)


def _endpoint_continuity(axes) -> PropertyResult:
    worst = 0.0
    for ax in axes[:3]:
        q = rotation.quarter_turn(ax)
        for a in (1e-3, 1.0 - 1e-3):
            diff = fracpow.balakrishnan_power(q, a) - rotation.frac_power_closed(ax, a)
            worst = max(worst, float(_fro(diff)))
        for a in (0.0, 1.0):  # exact endpoints take the integer fast path
            diff = fracpow.real_power(q, a) - rotation.frac_power_closed(ax, a)
            worst = max(worst, float(_fro(diff)))
    return PropertyResult("endpoint_continuity", worst)


def _resolvent_identity(axes) -> PropertyResult:
    lams = [0.0] + list(np.logspace(-2.0, 6.0, 17))
    eye = np.eye(3)
    worst = 0.0
    for ax in axes[:7]:
        q = rotation.quarter_turn(ax)
        for lam in lams:
            res = fracpow.resolvent_quarter_turn(ax, float(lam))
            worst = max(worst, float(_fro((float(lam) * eye + q) @ res - eye)))
    return PropertyResult("resolvent_identity", worst)


_FRACPOW_CHECKS = [
    (("engine_matches_closed_form", "three_way_agreement"), _engine_agreement),
    (("exponent_addition",), _exponent_addition),
    (("power_composition",), _power_composition),
    (("endpoint_continuity",), _endpoint_continuity),
    (("resolvent_identity",), _resolvent_identity),
]


def fracpow_properties() -> list[PropertyResult]:
    return _run_checks(_FRACPOW_CHECKS, axis_grid(n_random=2))


def run_suite(suite: str) -> list[PropertyResult]:
    """Run one named suite ('rotation', 'fracpow', or 'all')."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    results = []
    if suite in ("all", "rotation"):
        results.extend(rotation_properties())
    if suite in ("all", "fracpow"):
        results.extend(fracpow_properties())
    return results
