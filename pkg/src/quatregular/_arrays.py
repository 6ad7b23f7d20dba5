"""Vectorised helpers shared by the norm grids and the coverage search.

Everything here is private plumbing: rows of shape (..., 4) hold quaternion
components, and complex arrays hold points of a fixed slice plane.
"""

from __future__ import annotations

import numpy as np

from .series import Series


def coeff_rows(f: Series) -> np.ndarray:
    """Coefficients as an (N+1, 4) float array."""
    return np.array([a.components for a in f.coeffs], dtype=float)


def qmul_rows(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Componentwise quaternion product of broadcastable (..., 4) arrays."""
    p0, p1, p2, p3 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    q0, q1, q2, q3 = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack(
        [
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
        ],
        axis=-1,
    )


def eval_rows(coeffs: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Evaluate the series at quaternion rows by left power accumulation."""
    points = np.atleast_2d(points)
    acc = np.broadcast_to(coeffs[0], points.shape).copy()
    power = np.zeros_like(points)
    power[..., 0] = 1.0
    for a in coeffs[1:]:
        power = qmul_rows(power, points)
        acc = acc + qmul_rows(power, np.broadcast_to(a, points.shape))
    return acc


def power_table(z: np.ndarray, n_plus_one: int) -> np.ndarray:
    """Powers z^0..z^N of a complex vector, shape (N+1, T)."""
    out = np.empty((n_plus_one, z.shape[0]), dtype=complex)
    out[0] = 1.0
    for n in range(1, n_plus_one):
        out[n] = out[n - 1] * z
    return out


def sphere_constants(coeffs: np.ndarray, x: np.ndarray,
                     y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sphere constants (b, c) for each sphere x_t + y_t S, shapes (T, 4).

    b collects Re(w^n) a_n and c the signed Im(w^n) a_n with w = x + iy.
    """
    w = x + 1j * y
    powers = power_table(w, coeffs.shape[0])
    b = powers.real.T @ coeffs
    c = powers.imag.T @ coeffs
    return b, c


def _imag_b_conj_c(b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Imaginary part of b * conj(c) for rows, shape (T, 3)."""
    b0, b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    c0, c1, c2, c3 = c[..., 0], c[..., 1], c[..., 2], c[..., 3]
    return np.stack(
        [
            -b0 * c1 + b1 * c0 - b2 * c3 + b3 * c2,
            -b0 * c2 + b1 * c3 + b2 * c0 - b3 * c1,
            -b0 * c3 - b1 * c2 + b2 * c1 + b3 * c0,
        ],
        axis=-1,
    )


def sphere_extrema_rows(b: np.ndarray, c: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form (min, max) of |b + I c| over the unit sphere, per row."""
    base = np.sum(b * b, axis=-1) + np.sum(c * c, axis=-1)
    swing = 2.0 * np.linalg.norm(_imag_b_conj_c(b, c), axis=-1)
    low = np.sqrt(np.clip(base - swing, 0.0, None))
    high = np.sqrt(base + swing)
    return low, high


def slice_values(coeffs: np.ndarray, unit_times_coeffs: np.ndarray,
                 z: np.ndarray) -> np.ndarray:
    """Values of the series on a slice at complex points z, shape (T, 4).

    Uses q^n a_n = Re(z^n) a_n + Im(z^n) (I a_n) for q = x + y I, z = x + iy,
    so a single pair of real matrix products evaluates the whole grid.
    """
    powers = power_table(z, coeffs.shape[0])
    return powers.real.T @ coeffs + powers.imag.T @ unit_times_coeffs
