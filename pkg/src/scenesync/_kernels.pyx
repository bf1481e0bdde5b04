# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled quaternion kernels.

Twin of scenesync._kernels_py; see that module for the API contract.
Scalar-first (w, x, y, z) Hamilton quaternions as four doubles.
"""

from libc.math cimport acos, cos, sin, sqrt

cdef double _PI = 3.141592653589793
cdef double _RAD2DEG = 180.0 / 3.141592653589793
cdef double _DEG2RAD = 3.141592653589793 / 180.0


cdef inline (double, double, double, double) _norm4(
    double w, double x, double y, double z
):
    cdef double n = sqrt(w * w + x * x + y * y + z * z)
    cdef double inv
    if n == 0.0:
        return (1.0, 0.0, 0.0, 0.0)
    inv = 1.0 / n
    return (w * inv, x * inv, y * inv, z * inv)


cdef inline (double, double, double, double) _mul4(
    double aw, double ax, double ay, double az,
    double bw, double bx, double by, double bz,
):
    return _norm4(
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


def quat_normalize(double w, double x, double y, double z):
    return _norm4(w, x, y, z)


def quat_multiply(
    double aw, double ax, double ay, double az,
    double bw, double bx, double by, double bz,
):
    return _mul4(aw, ax, ay, az, bw, bx, by, bz)


def quat_conjugate(double w, double x, double y, double z):
    return (w, -x, -y, -z)


def quat_from_axis_angle(double ax, double ay, double az, double angle_deg):
    cdef double half = angle_deg * _DEG2RAD * 0.5
    cdef double s = sin(half)
    return _norm4(cos(half), ax * s, ay * s, az * s)


def quat_correction(
    double sw, double sx, double sy, double sz,
    double cw, double cx, double cy, double cz,
):
    return _mul4(sw, sx, sy, sz, cw, -cx, -cy, -cz)


def drift_angle_deg(double w):
    if w > 1.0:
        w = 1.0
    elif w < -1.0:
        w = -1.0
    return 2.0 * acos(w) * _RAD2DEG


def rotate_axis_angle(
    double ax, double ay, double az, double angle_deg,
    double qw, double qx, double qy, double qz,
):
    cdef double half = angle_deg * _DEG2RAD * 0.5
    cdef double s = sin(half)
    return _mul4(cos(half), ax * s, ay * s, az * s, qw, qx, qy, qz)
