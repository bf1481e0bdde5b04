"""Pure-Python quaternion kernels.

Twin of the compiled extension ``scenesync._kernels``; same functions, same
semantics, selected at import time by :mod:`scenesync._backend` when the
extension is unavailable. All quaternions are scalar-first ``(w, x, y, z)``
Hamilton quaternions passed as four floats and returned as tuples.
"""

from math import acos, cos, radians, sin, sqrt

_RAD2DEG = 180.0 / 3.141592653589793


def quat_normalize(w: float, x: float, y: float, z: float):
    n = sqrt(w * w + x * x + y * y + z * z)
    if n == 0.0:
        return (1.0, 0.0, 0.0, 0.0)
    inv = 1.0 / n
    return (w * inv, x * inv, y * inv, z * inv)


def quat_multiply(
    aw: float, ax: float, ay: float, az: float,
    bw: float, bx: float, by: float, bz: float,
):
    w = aw * bw - ax * bx - ay * by - az * bz
    x = aw * bx + ax * bw + ay * bz - az * by
    y = aw * by - ax * bz + ay * bw + az * bx
    z = aw * bz + ax * by - ay * bx + az * bw
    return quat_normalize(w, x, y, z)


def quat_conjugate(w: float, x: float, y: float, z: float):
    return (w, -x, -y, -z)


def quat_from_axis_angle(ax: float, ay: float, az: float, angle_deg: float):
    half = radians(angle_deg) * 0.5
    s = sin(half)
    return quat_normalize(cos(half), ax * s, ay * s, az * s)


def quat_correction(
    sw: float, sx: float, sy: float, sz: float,
    cw: float, cx: float, cy: float, cz: float,
):
    # s composed with the conjugate of c: the rotation taking c onto s.
    return quat_multiply(sw, sx, sy, sz, cw, -cx, -cy, -cz)


def drift_angle_deg(w: float) -> float:
    if w > 1.0:
        w = 1.0
    elif w < -1.0:
        w = -1.0
    return 2.0 * acos(w) * _RAD2DEG


def rotate_axis_angle(
    ax: float, ay: float, az: float, angle_deg: float,
    qw: float, qx: float, qy: float, qz: float,
):
    half = radians(angle_deg) * 0.5
    s = sin(half)
    return quat_multiply(cos(half), ax * s, ay * s, az * s, qw, qx, qy, qz)
