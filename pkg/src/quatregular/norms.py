"""Uniform and slice norms for series on balls centred at the origin.

The slice norm of f at a unit I combines the boundary maxima of the two
holomorphic components of the restriction to that slice; the global norm is
the supremum of slice norms over the whole sphere of units. It is equivalent
to the uniform norm within a factor sqrt(2), and unlike the uniform norm it
is invariant under coefficient conjugation, which is what the mean value
bound needs.

All suprema are computed on deterministic grids with local refinement and a
reported convergence gap; nothing here is Monte Carlo.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._arrays import coeff_rows, power_table, sphere_constants, sphere_extrema_rows
from .errors import DomainError, PreconditionError
from .quaternions import I as CANONICAL_I
from .quaternions import Quaternion, UnitImaginary, _coerce, sphere_sample
from .series import Series, slice_derivative
from .slices import split

DEFAULT_THETA_GRID = 512
DEFAULT_SPHERE_GRID = 2048

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class NormReport:
    """A computed supremum together with how it was obtained.

    ``certified_tol`` is the refinement convergence gap: how much the value
    was still moving when the local search stopped, floored at rounding noise.
    """

    value: float
    method: str
    resolution: dict = field(default_factory=dict)
    certified_tol: float = 0.0

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "resolution": dict(self.resolution),
            "certified_tol": self.certified_tol,
        }


def _tol_floor(value: float, gap: float) -> float:
    return max(gap, 4e-15 * max(1.0, value))


# -- closed form on spheres --------------------------------------------------

def sphere_extrema(b: Quaternion, c: Quaternion) -> tuple[float, float]:
    """Exact (min, max) of |b + I c| over all imaginary units I.

    |b + I c|^2 = |b|^2 + |c|^2 + 2 <Im(b conj(c)), I> is affine in I, so the
    extrema are attained along +-Im(b conj(c)) and have a closed form. The
    minimum is clamped at zero against rounding.
    """
    b = _coerce(b)
    c = _coerce(c)
    base = b.modulus_sq() + c.modulus_sq()
    swing = 2.0 * (b * c.conjugate()).imag.modulus()
    low = math.sqrt(max(base - swing, 0.0))
    high = math.sqrt(base + swing)
    return low, high


def _sphere_range_at(coeff_list, s: float, theta: float) -> tuple[float, float]:
    """Scalar (min, max) of |f| on the sphere at angle theta of radius s."""
    wr = s * math.cos(theta)
    wi = s * math.sin(theta)
    b0 = b1 = b2 = b3 = c0 = c1 = c2 = c3 = 0.0
    pr, pi = 1.0, 0.0
    for n, (a0, a1, a2, a3) in enumerate(coeff_list):
        if n:
            pr, pi = pr * wr - pi * wi, pr * wi + pi * wr
        b0 += pr * a0
        b1 += pr * a1
        b2 += pr * a2
        b3 += pr * a3
        c0 += pi * a0
        c1 += pi * a1
        c2 += pi * a2
        c3 += pi * a3
    base = b0 * b0 + b1 * b1 + b2 * b2 + b3 * b3 + c0 * c0 + c1 * c1 + c2 * c2 + c3 * c3
    v1 = -b0 * c1 + b1 * c0 - b2 * c3 + b3 * c2
    v2 = -b0 * c2 + b1 * c3 + b2 * c0 - b3 * c1
    v3 = -b0 * c3 - b1 * c2 + b2 * c1 + b3 * c0
    swing = 2.0 * math.sqrt(v1 * v1 + v2 * v2 + v3 * v3)
    return math.sqrt(max(base - swing, 0.0)), math.sqrt(base + swing)


# -- one dimensional refinement ----------------------------------------------

def _golden_max(fn, lo: float, hi: float, xatol: float = 1e-9) -> tuple[float, float]:
    """Golden-section maximisation; returns (value, convergence gap)."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = fn(c), fn(d)
    best = max(fc, fd)
    history = [best]
    while b - a > xatol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = fn(d)
        best = max(best, fc, fd)
        history.append(best)
    gap = best - history[max(0, len(history) - 6)]
    return best, gap


def _refine_grid_maxima(values: np.ndarray, xs: np.ndarray, fn,
                        periodic: bool, max_brackets: int = 6) -> tuple[float, float]:
    """Refine the local maxima of a sampled profile; returns (value, gap)."""
    n = len(values)
    if n < 3:
        return float(np.max(values)), 0.0
    if periodic:
        mask = (values >= np.roll(values, 1)) & (values >= np.roll(values, -1))
    else:
        mask = np.zeros(n, dtype=bool)
        mask[1:-1] = (values[1:-1] >= values[:-2]) & (values[1:-1] >= values[2:])
        mask[0] = values[0] >= values[1]
        mask[-1] = values[-1] >= values[-2]
    idxs = np.flatnonzero(mask)
    if idxs.size == 0:
        idxs = np.array([int(np.argmax(values))])
    order = idxs[np.argsort(-values[idxs], kind="stable")][:max_brackets]
    step = xs[1] - xs[0]
    best = float(np.max(values))
    worst_gap = 0.0
    for i in order:
        lo = xs[i] - step
        hi = xs[i] + step
        if not periodic:
            lo = max(lo, xs[0])
            hi = min(hi, xs[-1])
        val, gap = _golden_max(fn, lo, hi)
        best = max(best, val)
        worst_gap = max(worst_gap, gap)
    return best, worst_gap


# -- uniform norm on balls -----------------------------------------------------

def sup_norm_ball(f: Series, s: float,
                  theta_grid: int = DEFAULT_THETA_GRID) -> NormReport:
    """Maximum modulus on the closed ball of radius s.

    The maximum sits on the boundary, and the supremum over each boundary
    sphere x + y S has a closed form, so only the angle along a half circle is
    gridded and golden-section refined.
    """
    if not 0.0 <= s < f.radius:
        raise DomainError("outside ball of validity")
    if s == 0.0 or f.degree == 0:
        return NormReport(f.coeffs[0].modulus(), "closed-form")
    coeff_array = coeff_rows(f)
    theta = np.linspace(0.0, math.pi, theta_grid)
    b, c = sphere_constants(coeff_array, s * np.cos(theta), s * np.sin(theta))
    _, high = sphere_extrema_rows(b, c)
    coeff_list = [a.components for a in f.coeffs]

    def at(t: float) -> float:
        return _sphere_range_at(coeff_list, s, t)[1]

    value, gap = _refine_grid_maxima(high, theta, at, periodic=False)
    return NormReport(value, "grid+refine", {"theta": theta_grid},
                      _tol_floor(value, gap))


def inf_norm_ball(f: Series, s: float, theta_grid: int = 256,
                  radial_grid: int = 64) -> NormReport:
    """Minimum modulus on the closed ball of radius s.

    Unlike the maximum this can be attained anywhere inside, so a polar grid
    over the half disc of sphere parameters is scanned and the best cell is
    polished with a shrinking compass search.
    """
    if not 0.0 <= s < f.radius:
        raise DomainError("outside ball of validity")
    if s == 0.0 or f.degree == 0:
        return NormReport(f.coeffs[0].modulus(), "closed-form")
    coeff_array = coeff_rows(f)
    radii = np.linspace(0.0, s, radial_grid)
    theta = np.linspace(0.0, math.pi, theta_grid)
    rr, tt = np.meshgrid(radii, theta, indexing="ij")
    b, c = sphere_constants(coeff_array, (rr * np.cos(tt)).ravel(),
                            (rr * np.sin(tt)).ravel())
    low, _ = sphere_extrema_rows(b, c)
    low = low.reshape(radial_grid, theta_grid)
    coeff_list = [a.components for a in f.coeffs]
    i, j = np.unravel_index(int(np.argmin(low)), low.shape)
    t_best, th_best = float(radii[i]), float(theta[j])
    val = float(low[i, j])
    step_t, step_th = s / radial_grid, math.pi / theta_grid
    gap = 0.0
    budget = 20000
    while (step_t > 1e-10 * s or step_th > 1e-10) and budget > 0:
        budget -= 1
        moved = False
        for dt, dth in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            t2 = min(max(t_best + dt * step_t, 0.0), s)
            th2 = min(max(th_best + dth * step_th, 0.0), math.pi)
            v2 = _sphere_range_at(coeff_list, t2, th2)[0]
            if v2 < val:
                gap = val - v2
                t_best, th_best, val, moved = t2, th2, v2, True
                break
        if not moved:
            step_t *= 0.5
            step_th *= 0.5
    return NormReport(val, "grid+refine",
                      {"theta": theta_grid, "radial": radial_grid},
                      _tol_floor(val, gap))


# -- slice norm and its supremum over units ------------------------------------

def _circle_max(coeffs: np.ndarray, radius: float, theta_grid: int,
                refine: bool = True) -> tuple[float, float]:
    """Maximum of |P(radius * e^{i theta})| for a complex polynomial P."""
    if len(coeffs) == 1:
        return abs(coeffs[0]), 0.0
    theta = np.linspace(0.0, 2.0 * math.pi, theta_grid, endpoint=False)
    z = radius * np.exp(1j * theta)
    acc = np.full_like(z, coeffs[-1])
    for a in coeffs[-2::-1]:
        acc = acc * z + a
    grid_vals = np.abs(acc)
    if not refine:
        return float(grid_vals.max()), math.inf
    poly = list(coeffs)

    def at(t: float) -> float:
        zz = radius * complex(math.cos(t), math.sin(t))
        acc_s = poly[-1]
        for a in poly[-2::-1]:
            acc_s = acc_s * zz + a
        return abs(acc_s)

    return _refine_grid_maxima(grid_vals, theta, at, periodic=True, max_brackets=4)


def _slice_norm_report(f: Series, unit: UnitImaginary,
                       j_unit: UnitImaginary | None = None,
                       theta_grid: int = DEFAULT_THETA_GRID) -> tuple[float, float]:
    pair = split(f, unit, j_unit=j_unit)
    v_f, g_f = _circle_max(np.asarray(pair.F.coeffs, dtype=complex), f.radius, theta_grid)
    v_g, g_g = _circle_max(np.asarray(pair.G.coeffs, dtype=complex), f.radius, theta_grid)
    return math.hypot(v_f, v_g), g_f + g_g


def slice_norm(f: Series, unit: UnitImaginary,
               j_unit: UnitImaginary | None = None,
               theta_grid: int = DEFAULT_THETA_GRID) -> float:
    """Slice norm at a unit: hypot of the boundary maxima of the two components.

    The value does not depend on which orthogonal completion ``j_unit`` is
    used; passing one explicitly exists for exactly that check.
    """
    return _slice_norm_report(f, unit, j_unit, theta_grid)[0]


def _tangent_basis(u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    axis = int(np.argmin(np.abs(u)))
    e = np.zeros(3)
    e[axis] = 1.0
    t1 = e - u[axis] * u
    t1 /= np.linalg.norm(t1)
    return t1, np.cross(u, t1)

_PATTERN = np.array([
    (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0),
    (0.707, 0.707), (0.707, -0.707), (-0.707, 0.707), (-0.707, -0.707),
])


def split_norm(f: Series, samples: int = DEFAULT_SPHERE_GRID, seed: int = 0,
               theta_grid: int = DEFAULT_THETA_GRID,
               refine_candidates: int = 2) -> NormReport:
    """Supremum of the slice norm over the sphere of units.

    Real-coefficient series short-circuit: every slice then carries the same
    restriction. Otherwise a deterministic lattice of units is scanned with a
    vectorised surrogate (grid boundary maxima, no one dimensional polish),
    the best separated candidates are pushed uphill by a compass search on
    the sphere, and the winners are re-evaluated at full precision.
    """
    coeff_array = coeff_rows(f)
    resolution = {"sphere": samples, "theta": theta_grid}
    if f.degree == 0:
        return NormReport(f.coeffs[0].modulus(), "closed-form")
    if np.all(coeff_array[:, 1:] == 0.0):
        value, gap = _slice_norm_report(f, CANONICAL_I, theta_grid=theta_grid)
        return NormReport(value, "grid+refine", {"sphere": 1, "theta": theta_grid},
                          _tol_floor(value, gap))

    imag_rows = coeff_array[:, 1:]
    alpha_re = coeff_array[:, 0]
    scan_grid = max(theta_grid // 2, 64)
    z = f.radius * np.exp(2j * math.pi * np.arange(scan_grid) / scan_grid)
    powers = power_table(z, coeff_array.shape[0])
    w_t = powers.T

    def batch_values(units: np.ndarray) -> np.ndarray:
        """Grid-only slice norms for unit rows (m, 3)."""
        axis = np.argmin(np.abs(units), axis=1)
        e = np.eye(3)[axis]
        proj = np.sum(e * units, axis=1, keepdims=True)
        jv = e - proj * units
        jv /= np.linalg.norm(jv, axis=1, keepdims=True)
        kv = np.cross(units, jv)
        alpha = alpha_re[:, None] + 1j * (imag_rows @ units.T)
        beta = (imag_rows @ jv.T) + 1j * (imag_rows @ kv.T)
        m_f = np.abs(w_t @ alpha).max(axis=0)
        m_g = np.abs(w_t @ beta).max(axis=0)
        return np.hypot(m_f, m_g)

    units = sphere_sample(samples, seed)
    lattice = np.array([(u.x1, u.x2, u.x3) for u in units])
    scan = batch_values(lattice)

    order = np.argsort(-scan, kind="stable")
    candidates = []
    for idx in order:
        u = lattice[idx]
        if any(np.dot(u, v) > math.cos(0.2) for v in candidates):
            continue
        candidates.append(u)
        if len(candidates) >= refine_candidates:
            break

    def polish(u0: np.ndarray) -> tuple[float, float]:
        u = u0.copy()
        val = float(batch_values(u[None, :])[0])
        step, budget = 0.1, 600
        while step > 1e-4 and budget > 0:
            budget -= 1
            t1, t2 = _tangent_basis(u)
            cands = u[None, :] + step * (_PATTERN[:, :1] * t1 + _PATTERN[:, 1:] * t2)
            cands /= np.linalg.norm(cands, axis=1, keepdims=True)
            vals = batch_values(cands)
            best = int(np.argmax(vals))
            if vals[best] > val:
                u, val = cands[best], float(vals[best])
            else:
                step *= 0.5
        # finish at full precision: refined circle maxima, smaller steps
        unit = UnitImaginary.from_vector(*u)
        val, circle_gap = _slice_norm_report(f, unit, theta_grid=theta_grid)
        step, last_improvement, budget = 1e-4, 0.0, 200
        while step > 3e-6 and budget > 0:
            budget -= 1
            t1, t2 = _tangent_basis(u)
            moved = False
            for da, db in _PATTERN:
                cand = u + step * (da * t1 + db * t2)
                cand /= np.linalg.norm(cand)
                v2, g2 = _slice_norm_report(f, UnitImaginary.from_vector(*cand),
                                            theta_grid=theta_grid)
                if v2 > val:
                    last_improvement = v2 - val
                    u, val, circle_gap, moved = cand, v2, g2, True
                    break
            if not moved:
                step *= 0.45
        # residual compass truncation scales with the square of the last step
        return val, circle_gap + last_improvement + val * step * step

    best_value, best_gap = -math.inf, 0.0
    for u0 in candidates:
        val, gap = polish(u0)
        if val > best_value:
            best_value, best_gap = val, gap
    return NormReport(best_value, "grid+refine", resolution,
                      _tol_floor(best_value, best_gap))


def mean_value_margin(f: Series, q, **norm_options) -> float:
    """Slack of the mean value bound at q: norm of the derivative minus |f(q)|/|q|.

    Nonnegative (up to the certified tolerance) whenever f vanishes at the
    origin, which is a stated precondition.
    """
    q = _coerce(q)
    if f.coeffs[0].modulus_sq() != 0.0:
        raise PreconditionError("requires f(0) = 0")
    norm_q = q.modulus()
    if norm_q == 0.0 or norm_q >= f.radius:
        raise DomainError("point must satisfy 0 < |q| < radius")
    derivative_norm = split_norm(slice_derivative(f), **norm_options).value
    from .series import evaluate

    return derivative_norm - evaluate(f, q).modulus() / norm_q
