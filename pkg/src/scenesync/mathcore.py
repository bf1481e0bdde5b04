"""Quaternion algebra, orientation-drift metrics, and trend-line fitting.

Conventions: scalar-first (w, x, y, z) Hamilton quaternions, right-handed
frames, angles in degrees. Composing ``quat_multiply(a, b)`` applies ``b``
first, then ``a``. The drift angle between two replica orientations is the
rotation angle of the correction quaternion taking one onto the other,
reported on the full [0, 360] range without double-cover folding so that
accumulated divergence past a half turn stays visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite, sqrt

import numpy as np

from scenesync._backend import kernels

UNIT_TOLERANCE = 1e-9


class InsufficientDataError(ValueError):
    """Fewer samples than the model has coefficients."""


class DegenerateInputError(ValueError):
    """Input admits no unique least-squares solution."""


@dataclass(frozen=True)
class UnitQuaternion:
    w: float
    x: float
    y: float
    z: float

    @staticmethod
    def identity() -> "UnitQuaternion":
        return UnitQuaternion(1.0, 0.0, 0.0, 0.0)

    @staticmethod
    def from_components(w: float, x: float, y: float, z: float) -> "UnitQuaternion":
        """Build a quaternion, normalizing the given components."""
        return UnitQuaternion(*kernels.quat_normalize(w, x, y, z))

    def norm(self) -> float:
        return sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)


@dataclass(frozen=True)
class Pose:
    """Orientation plus position (meters) of a shared scene object."""

    orientation: UnitQuaternion
    position: tuple[float, float, float]

    @staticmethod
    def identity() -> "Pose":
        return Pose(UnitQuaternion.identity(), (0.0, 0.0, 0.0))


@dataclass(frozen=True)
class PolyFit:
    """Least-squares polynomial fit; coefficients constant term first."""

    degree: int
    coefficients: tuple[float, ...]
    r_squared: float

    def evaluate(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def _check_unit_axis(axis) -> tuple[float, float, float]:
    ax, ay, az = (float(axis[0]), float(axis[1]), float(axis[2]))
    n = sqrt(ax * ax + ay * ay + az * az)
    if abs(n - 1.0) > UNIT_TOLERANCE:
        raise ValueError(f"axis must be a unit vector, got norm {n!r}")
    return ax, ay, az


def quat_from_axis_angle(axis, angle_deg: float) -> UnitQuaternion:
    """Rotation of ``angle_deg`` degrees about a unit axis."""
    ax, ay, az = _check_unit_axis(axis)
    if not isfinite(angle_deg):
        raise ValueError("angle must be finite")
    return UnitQuaternion(*kernels.quat_from_axis_angle(ax, ay, az, angle_deg))


def quat_multiply(a: UnitQuaternion, b: UnitQuaternion) -> UnitQuaternion:
    """Hamilton product a*b: apply b, then a."""
    return UnitQuaternion(*kernels.quat_multiply(a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z))


def quat_inverse(q: UnitQuaternion) -> UnitQuaternion:
    """Inverse of a unit quaternion (its conjugate)."""
    return UnitQuaternion(q.w, -q.x, -q.y, -q.z)


def correction_quaternion(q_s: UnitQuaternion, q_c: UnitQuaternion) -> UnitQuaternion:
    """Rotation taking the replica orientation q_c onto the source q_s."""
    return UnitQuaternion(
        *kernels.quat_correction(q_s.w, q_s.x, q_s.y, q_s.z, q_c.w, q_c.x, q_c.y, q_c.z)
    )


def drift_angle(q_e: UnitQuaternion) -> float:
    """Rotation angle of a correction quaternion, degrees in [0, 360].

    No double-cover folding: the scalar part's sign is kept, so divergence
    past 180 degrees is reported as such.
    """
    return kernels.drift_angle_deg(q_e.w)


def minimal_angle(alpha_deg: float) -> float:
    """Fold a [0, 360] drift angle onto the minimal [0, 180] arc."""
    return min(alpha_deg, 360.0 - alpha_deg)


def rotate(q: UnitQuaternion, axis, angle_deg: float) -> UnitQuaternion:
    """World-frame rotation about a unit axis applied on top of q."""
    ax, ay, az = axis
    return UnitQuaternion(*kernels.rotate_axis_angle(ax, ay, az, angle_deg, q.w, q.x, q.y, q.z))


def predicted_drift(omega_deg_s: float, delay_s: float) -> float:
    """Analytic drift model: angular velocity times transport delay."""
    if omega_deg_s < 0.0 or delay_s < 0.0:
        raise ValueError("angular velocity and delay must be non-negative")
    return omega_deg_s * delay_s


def polyfit(points, degree: int) -> PolyFit:
    """Ordinary least squares fit of a degree-``degree`` polynomial.

    Solved via an orthogonal decomposition of the Vandermonde system, not
    the raw normal equations. ``r_squared`` is 1 - SS_res/SS_tot, defined
    as 1.0 when the data has zero total variance and zero residual.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    pts = [(float(x), float(y)) for x, y in points]
    if len(pts) < degree + 1:
        raise InsufficientDataError(
            f"need at least {degree + 1} points for degree {degree}, got {len(pts)}"
        )
    x = np.array([p[0] for p in pts])
    y = np.array([p[1] for p in pts])
    design = np.vander(x, degree + 1, increasing=True)
    coeffs, _, rank, _ = np.linalg.lstsq(design, y, rcond=None)
    if rank < degree + 1:
        raise DegenerateInputError("design matrix is rank deficient (e.g. repeated x values)")
    residuals = y - design @ coeffs
    ss_res = float(residuals @ residuals)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        r_squared = 1.0 if ss_res < 1e-24 else 0.0
    else:
        r_squared = 1.0 - ss_res / ss_tot
        r_squared = min(1.0, max(0.0, r_squared))
    return PolyFit(degree, tuple(float(c) for c in coeffs), r_squared)
