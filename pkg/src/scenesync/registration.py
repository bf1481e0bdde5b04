"""Rigid point-set registration of real-object landmarks onto model landmarks.

Estimates the proper rotation R and translation t minimizing the summed
squared residual  e(R, t) = sum_i || y_i - R x_i - t ||^2  over landmark
pairs (x_i, y_i), via SVD of the cross-covariance with a determinant
correction so mirrored inputs still yield a rotation, never a reflection.
Correspondence is given by input order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ORTHONORMAL_TOLERANCE = 1e-9


class InsufficientLandmarksError(ValueError):
    """Fewer than three landmark pairs."""


class DegenerateConfigurationError(ValueError):
    """Landmarks collinear (or worse): rotation not uniquely determined."""


@dataclass(frozen=True)
class LandmarkSet:
    """Paired landmarks: x_i on the real object, y_i on the virtual model."""

    pairs: tuple[tuple[tuple[float, float, float], tuple[float, float, float]], ...]

    @staticmethod
    def from_arrays(x, y) -> "LandmarkSet":
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape != y.shape or x.ndim != 2 or x.shape[1] != 3:
            raise ValueError("landmark arrays must both be N x 3")
        return LandmarkSet(tuple((tuple(a), tuple(b)) for a, b in zip(x, y)))

    @property
    def n(self) -> int:
        return len(self.pairs)

    def x_array(self) -> np.ndarray:
        return np.array([p[0] for p in self.pairs], dtype=float)

    def y_array(self) -> np.ndarray:
        return np.array([p[1] for p in self.pairs], dtype=float)


@dataclass(frozen=True)
class RigidTransform:
    """Proper rigid motion y = R x + t."""

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        r = np.asarray(self.rotation, dtype=float)
        t = np.asarray(self.translation, dtype=float).reshape(3)
        if r.shape != (3, 3):
            raise ValueError("rotation must be 3x3")
        if not np.allclose(r.T @ r, np.eye(3), atol=1e-8):
            raise ValueError("rotation matrix is not orthonormal")
        if np.linalg.det(r) < 0.0:
            raise ValueError("rotation matrix is a reflection (det < 0)")
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)

    @staticmethod
    def identity() -> "RigidTransform":
        return RigidTransform(np.eye(3), np.zeros(3))


def estimate_rigid_transform(landmarks: LandmarkSet) -> RigidTransform:
    """Least-squares (R, t) best mapping each x_i onto y_i."""
    if landmarks.n < 3:
        raise InsufficientLandmarksError(f"need at least 3 landmark pairs, got {landmarks.n}")
    x = landmarks.x_array()
    y = landmarks.y_array()
    x_bar = x.mean(axis=0)
    y_bar = y.mean(axis=0)
    xc = x - x_bar
    yc = y - y_bar
    if np.linalg.matrix_rank(xc, tol=1e-12) < 2:
        raise DegenerateConfigurationError("real-object landmarks are collinear")
    h = xc.T @ yc
    u, _, vt = np.linalg.svd(h)
    v = vt.T
    d = np.sign(np.linalg.det(v @ u.T))
    rotation = v @ np.diag([1.0, 1.0, d]) @ u.T
    translation = y_bar - rotation @ x_bar
    return RigidTransform(rotation, translation)


def registration_residual(transform: RigidTransform, landmarks: LandmarkSet) -> float:
    """Summed squared alignment error, square meters."""
    x = landmarks.x_array()
    y = landmarks.y_array()
    err = y - (x @ transform.rotation.T + transform.translation)
    return float(np.sum(err * err))


def transform_point(transform: RigidTransform, p) -> tuple[float, float, float]:
    out = transform.rotation @ np.asarray(p, dtype=float) + transform.translation
    return (float(out[0]), float(out[1]), float(out[2]))


def load_landmarks(path) -> LandmarkSet:
    """Read landmark pairs from text: six floats per line, ``#`` comments."""
    pairs = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 6:
                raise ValueError(f"{path}:{lineno}: expected 6 fields, got {len(fields)}")
            vals = [float(f) for f in fields]
            pairs.append((tuple(vals[0:3]), tuple(vals[3:6])))
    return LandmarkSet(tuple(pairs))
