"""Image coverage machinery: the pinched open set, its inscribed discs, the
coverage radius formula, fourth-root lifting, and the constructive search for
a Bloch-Landau type lower bound on the coverage radius of regular translations.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from ._arrays import coeff_rows, eval_rows
from .errors import DomainError, NumericalSearchError, PreconditionError
from .norms import split_norm, sup_norm_ball, _sphere_range_at
from .quaternions import ALGEBRA_TOL, I as CANONICAL_I
from .quaternions import Quaternion, UnitImaginary, _coerce
from .series import Series, slice_derivative, symmetrization
from .slices import regular_translation

SCHEMA = "quatregular/1"

_MU_GRID = 1024
_NEWTON_STEP = 1e-6
_NEWTON_MAX_ITER = 200
_RESIDUAL_TOL = 1e-8


@dataclass(frozen=True)
class OSetParams:
    """Radius parameter of the pinched set {q : |q|^3 < rho |Re q|^2}."""

    rho: float

    def __post_init__(self):
        if not self.rho > 0:
            raise DomainError("rho must be positive")


@dataclass(frozen=True)
class CoverageReport:
    """Outcome of certifying that sampled points of the pinched set are attained."""

    rho: float
    samples: int
    hits: int
    max_residual: float
    misses: list
    ball_radius: float
    seed: int

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "rho": self.rho,
            "samples": self.samples,
            "hits": self.hits,
            "max_residual": self.max_residual,
            "misses": [list(m.components) for m in self.misses],
            "ball_radius": self.ball_radius,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class SearchReport:
    """Result of the constructive coverage-radius search at a working radius r."""

    r: float
    R_r: float
    w: Quaternion
    rotation: Quaternion
    rho_r: float
    f_w: Quaternion
    diagnostics: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "r": self.r,
            "R_r": self.R_r,
            "w": list(self.w.components),
            "rotation": list(self.rotation.components),
            "rho_r": self.rho_r,
            "f_w": list(self.f_w.components),
            "diagnostics": self.diagnostics,
        }


# -- the pinched set -----------------------------------------------------------

def in_oset(q, rho: float) -> bool:
    """Strict membership |q|^3 < rho |Re q|^2. Membership forces |q| < rho."""
    if not rho > 0:
        raise DomainError("rho must be positive")
    q = _coerce(q)
    return q.modulus() ** 3 < rho * q.x0 * q.x0


def _cos_sin_turn(k: int, n: int) -> tuple[float, float]:
    """cos and sin of the angle 2 pi k / n, exact at quarter turns."""
    k %= n
    if 4 * k % n == 0:
        quarter = 4 * k // n
        return ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))[quarter]
    angle = 2.0 * math.pi * k / n
    return math.cos(angle), math.sin(angle)


def oset_slice_curve(rho: float, n: int) -> list[tuple[float, float]]:
    """n points of the figure-eight boundary (x^2+y^2)^{3/2} = rho x^2 in a slice.

    In polar form the curve is radius = rho cos^2(angle); points are emitted
    in increasing polar angle, passing exactly through (rho, 0), the origin,
    and (-rho, 0) whenever the quarter turns land on the grid.
    """
    if not rho > 0:
        raise DomainError("rho must be positive")
    if n < 16:
        raise DomainError("need at least 16 points to outline the curve")
    points = []
    for k in range(n):
        cos_a, sin_a = _cos_sin_turn(k, n)
        radius = rho * cos_a * cos_a
        points.append((radius * cos_a, radius * sin_a))
    return points


def inscribed_disc_margin(rho: float, sweep: int = 4096) -> float:
    """Worst slack of rho x^2 - (x^2+y^2)^{3/2} on the inscribed disc boundary.

    The disc has centre (rho/2, 0) and radius 37/256 rho^2; a positive margin
    at every swept boundary point certifies the disc sits strictly inside the
    right lobe of the pinched set's slice cross-section.
    """
    if not rho > 0:
        raise DomainError("rho must be positive")
    disc_radius = (37.0 / 256.0) * rho * rho
    ts = np.linspace(0.0, 2.0 * math.pi, sweep, endpoint=False)
    x = rho / 2.0 + disc_radius * np.cos(ts)
    y = disc_radius * np.sin(ts)
    margins = rho * x * x - (x * x + y * y) ** 1.5
    return float(margins.min())


def inscribed_disc_check(rho: float, sweep: int = 4096) -> bool:
    """Whether the disc of radius 37/256 rho^2 centred at (rho/2, 0) fits.

    Verified by sweeping the disc boundary. The symmetric disc at (-rho/2, 0)
    follows by the x -> -x symmetry of the cross-section.
    """
    if rho > 1.0:
        warnings.warn("claim verified only for rho <= 1 by this artifact",
                      stacklevel=2)
    return inscribed_disc_margin(rho, sweep) > 0.0


# -- coverage radius and fourth-root lifting ------------------------------------

def rho_lemma(f: Series, **norm_options) -> float:
    """Coverage radius radius*|f'(0)|^2 / (4 ||f'||) for f with f(0) = 0.

    Requires the derivative at the origin to be real; returns zero when it
    vanishes, in which case there is nothing to certify.
    """
    a0, a1 = f.coeffs[0], f.coeffs[1] if f.degree >= 1 else Quaternion()
    if a0.modulus_sq() != 0.0:
        raise PreconditionError("requires f(0) = 0")
    if not a1.is_real():
        raise PreconditionError("requires a real slice derivative at the origin")
    if a1.modulus_sq() == 0.0:
        return 0.0
    derivative_norm = split_norm(slice_derivative(f), **norm_options).value
    return f.radius * a1.modulus_sq() / (4.0 * derivative_norm)


def g_series(f: Series, c) -> Series:
    """Symmetrization of 1 - f c^{-1}: a real-coefficient series with value 1 at 0.

    Its modulus squares to that of 1 - f c^{-1} on each sphere, which turns
    statements about the excluded value c into statements about a slice
    preserving function.
    """
    c = _coerce(c)
    if c is None or c.modulus_sq() == 0.0:
        raise DomainError("excluded value must be nonzero")
    if f.coeffs[0].modulus_sq() != 0.0:
        raise PreconditionError("requires f(0) = 0")
    c_inv = c.inverse()
    base = [Quaternion(1.0)]
    base.extend(-(a * c_inv) for a in f.coeffs[1:])
    sym = symmetrization(Series(tuple(base), f.radius, f.exact))
    scale = max(1.0, max(a.modulus() for a in sym.coeffs))
    reals = []
    for idx, a in enumerate(sym.coeffs):
        if a.imag.modulus() > 1e-12 * scale:
            raise NumericalSearchError(
                f"symmetrization coefficient {idx} has a nonreal part beyond tolerance")
        reals.append(Quaternion(a.x0))
    return Series(tuple(reals), f.radius, f.exact)


def fourth_root_series(g: Series) -> Series:
    """Truncated fourth root of a real series with constant term 1.

    Solves 4 g p' = g' p coefficientwise, the differential identity satisfied
    by p = g^{1/4}; the truncation matches g through its own degree, so the
    star fourth power reproduces g coefficientwise there.
    """
    scale = max(1.0, max(a.modulus() for a in g.coeffs))
    for idx, a in enumerate(g.coeffs):
        if not a.is_real(1e-12 * scale):
            raise PreconditionError(f"requires real coefficients (coefficient {idx} is not)")
    gs = [a.x0 for a in g.coeffs]
    if abs(gs[0] - 1.0) > ALGEBRA_TOL:
        raise PreconditionError("requires constant term 1")
    gs[0] = 1.0
    top = len(gs) - 1
    p = [1.0] + [0.0] * top
    for n in range(top):
        lhs = sum((k + 1) * gs[k + 1] * p[n - k] for k in range(n + 1) if k + 1 <= top)
        rhs = 4.0 * sum((n + 1 - k) * gs[k] * p[n + 1 - k] for k in range(1, n + 1))
        p[n + 1] = (lhs - rhs) / (4.0 * (n + 1))
    return Series(tuple(Quaternion(v) for v in p), g.radius, exact=False)


def parseval_mean(psi: Series, r: float, unit: UnitImaginary = CANONICAL_I,
                  n_theta: int = 4096) -> tuple[float, float]:
    """Circle mean of |psi|^2 against the coefficient sum it must equal.

    Returns (quadrature value, sum of r^{2m} |coefficient_m|^2). The periodic
    trapezoid rule is spectrally accurate here, and the identity holds for
    arbitrary quaternion coefficients because the circle average kills every
    cross term regardless of the constant factors on either side.
    """
    if not 0.0 <= r < psi.radius:
        raise DomainError("outside ball of validity")
    coeff_array = coeff_rows(psi)
    unit_rows = np.array([(unit * a).components for a in psi.coeffs])
    thetas = 2.0 * math.pi * np.arange(n_theta) / n_theta
    z = r * np.exp(1j * thetas)
    from ._arrays import slice_values

    vals = slice_values(coeff_array, unit_rows, z)
    integral = float(np.mean(np.sum(vals * vals, axis=1)))
    powers = r ** (2.0 * np.arange(coeff_array.shape[0]))
    coeff_sum = float(np.sum(powers * np.sum(coeff_array * coeff_array, axis=1)))
    return integral, coeff_sum


# -- numerical attainment certificates ------------------------------------------

def _ball_lattice(ball_radius: float, count: int, seed: int,
                  hint: np.ndarray | None = None) -> np.ndarray:
    """Deterministic Newton starting points: origin, a hint, then seeded shells."""
    rng = np.random.default_rng(seed)
    points = [np.zeros(4)]
    if hint is not None:
        norm = np.linalg.norm(hint)
        if norm > 0:
            points.append(hint * min(1.0, 0.8 * ball_radius / norm))
    shells = (0.2, 0.45, 0.7, 0.9)
    while len(points) < count:
        for shell in shells:
            direction = rng.standard_normal(4)
            direction /= np.linalg.norm(direction)
            points.append(shell * ball_radius * direction)
            if len(points) >= count:
                break
    return np.array(points[:count])


def attain(f: Series, target, ball_radius: float, starts: int = 64,
           seed: int = 0) -> Quaternion | None:
    """Try to exhibit a preimage of ``target`` inside the open ball.

    Multistart damped Newton on the four real variables, with a central
    difference Jacobian and Armijo backtracking. Success means residual below
    1e-8 at a point strictly inside the ball; returning None proves nothing.
    """
    target = _coerce(target)
    if ball_radius > f.radius:
        raise DomainError("search ball cannot exceed the ball of validity")
    coeff_array = coeff_rows(f)
    goal = np.array(target.components)

    def residual(points: np.ndarray) -> np.ndarray:
        return eval_rows(coeff_array, points) - goal

    for q0 in _ball_lattice(ball_radius, starts, seed, hint=goal):
        q = q0.copy()
        res = residual(q[None])[0]
        res_norm = float(np.linalg.norm(res))
        for _ in range(_NEWTON_MAX_ITER):
            if res_norm < 1e-10:
                break
            probes = np.repeat(q[None], 8, axis=0)
            for m in range(4):
                probes[2 * m, m] += _NEWTON_STEP
                probes[2 * m + 1, m] -= _NEWTON_STEP
            vals = eval_rows(coeff_array, probes)
            jac = np.empty((4, 4))
            for m in range(4):
                jac[:, m] = (vals[2 * m] - vals[2 * m + 1]) / (2.0 * _NEWTON_STEP)
            try:
                step = np.linalg.solve(jac, -res)
            except np.linalg.LinAlgError:
                step, *_ = np.linalg.lstsq(jac, -res, rcond=None)
            lam = 1.0
            accepted = False
            while lam > 1e-8:
                trial = q + lam * step
                trial_res = residual(trial[None])[0]
                trial_norm = float(np.linalg.norm(trial_res))
                if trial_norm <= (1.0 - 1e-4 * lam) * res_norm:
                    q, res, res_norm = trial, trial_res, trial_norm
                    accepted = True
                    break
                lam *= 0.5
            if not accepted:
                break
        if res_norm < _RESIDUAL_TOL and np.linalg.norm(q) < ball_radius:
            return Quaternion(*q)
    return None


def coverage_report(f: Series, rho: float, samples: int, seed: int = 0,
                    ball_radius: float | None = None, margin: float = 1e-3,
                    starts: int = 64) -> CoverageReport:
    """Sample the strict interior of the pinched set and certify attainment.

    Points are rejection sampled from the set with radius rho*(1 - margin),
    then handed to :func:`attain`. Misses are reported as data, never
    dropped; a miss is a failed certificate, not a disproof.
    """
    if ball_radius is None:
        ball_radius = f.radius
    shrunk = rho * (1.0 - margin)
    if not shrunk > 0:
        raise DomainError("rho must be positive")
    rng = np.random.default_rng(seed)
    targets: list[np.ndarray] = []
    attempts = 0
    while len(targets) < samples:
        attempts += 1
        if attempts > 10000:
            raise NumericalSearchError("rejection sampling failed to fill the request",
                                       {"accepted": len(targets)})
        batch = rng.standard_normal((4096, 4))
        batch /= np.linalg.norm(batch, axis=1, keepdims=True)
        radii = shrunk * rng.random(4096) ** 0.25
        batch *= radii[:, None]
        keep = np.linalg.norm(batch, axis=1) ** 3 < shrunk * batch[:, 0] ** 2
        targets.extend(batch[keep])
    targets = targets[:samples]

    coeff_array = coeff_rows(f)
    hits = 0
    max_residual = 0.0
    misses: list[Quaternion] = []
    for t in targets:
        point = Quaternion(*t)
        root = attain(f, point, ball_radius, starts=starts, seed=seed)
        if root is None:
            misses.append(point)
            continue
        res = eval_rows(coeff_array, np.array([root.components]))[0] - t
        hits += 1
        max_residual = max(max_residual, float(np.linalg.norm(res)))
    return CoverageReport(rho, samples, hits, max_residual, misses,
                          ball_radius, seed)


# -- the constructive search -----------------------------------------------------

def bl_search(f: Series, r: float, theta_grid: int = 512,
              mu_grid: int = _MU_GRID, **norm_options) -> SearchReport:
    """Constructive coverage search at working radius r in (0, 1).

    For f with f(0) = 0 and slice derivative 1 at the origin, the search
    finds the smallest s with s * M(r - s) = r, where M(t) is the maximum of
    |f'| on the ball of radius t. Half of it is the working ball radius; a
    maximiser w of |f'| on the sphere of radius r - 2R recentres f, a right
    unit factor makes the recentred derivative real at the origin, and the
    coverage radius of the result is reported together with its universal
    lower bound r / (32 sqrt(2)).
    """
    if f.coeffs[0].modulus_sq() != 0.0:
        raise PreconditionError("requires f(0) = 0")
    if f.degree < 1 or f.coeffs[1] != Quaternion(1.0):
        raise PreconditionError("requires slice derivative 1 at the origin")
    if not 0.0 < r < 1.0:
        raise PreconditionError("requires a working radius in (0, 1)")
    if r >= f.radius:
        raise DomainError("working radius must sit inside the ball of validity")

    derivative = slice_derivative(f)
    max_cache: dict[float, float] = {}

    def deriv_max(t: float) -> float:
        if t not in max_cache:
            max_cache[t] = sup_norm_ball(derivative, t, theta_grid=theta_grid).value
        return max_cache[t]

    def mu(s: float) -> float:
        return s * deriv_max(r - s)

    grid = np.linspace(0.0, r, mu_grid)
    mu_values = np.array([mu(float(s)) for s in grid])
    profile = [[float(s), float(m)] for s, m in zip(grid, mu_values)]

    crossing = np.flatnonzero(mu_values >= r - 1e-12)
    if crossing.size == 0:
        raise NumericalSearchError("no s with mu(s) = r on the grid",
                                   {"mu_profile": profile})
    first = int(crossing[0])
    if first == 0:
        raise NumericalSearchError(
            "degenerate working radius: the profile meets r at s = 0",
            {"mu_profile": profile})
    lo, hi = float(grid[first - 1]), float(grid[first])
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if mu(mid) >= r - 1e-12:
            hi = mid
        else:
            lo = mid
    s_star = hi
    mu_residual = abs(mu(s_star) - r)

    ball_radius = s_star / 2.0
    sphere_radius = r - s_star
    deriv_coeff_list = [a.components for a in derivative.coeffs]

    if sphere_radius < 1e-12:
        w = Quaternion()
        locator_angle = 0.0
    else:
        thetas = np.linspace(0.0, math.pi, theta_grid)
        highs = np.array([
            _sphere_range_at(deriv_coeff_list, sphere_radius, float(t))[1]
            for t in thetas
        ])
        best_idx = int(np.argmax(highs))  # first maximum, smallest angle
        step = thetas[1] - thetas[0]
        lo = max(0.0, thetas[best_idx] - step)
        hi = min(math.pi, thetas[best_idx] + step)
        angle = _argmax_golden(
            lambda t: _sphere_range_at(deriv_coeff_list, sphere_radius, t)[1], lo, hi)
        if highs[best_idx] >= _sphere_range_at(deriv_coeff_list, sphere_radius, angle)[1]:
            angle = float(thetas[best_idx])
        locator_angle = angle
        x = sphere_radius * math.cos(angle)
        y = sphere_radius * math.sin(angle)
        from .slices import sphere_pair

        constants = sphere_pair(derivative, x, y)
        direction = (constants.b * constants.c.conjugate()).imag
        if direction.modulus() > 1e-14:
            unit = UnitImaginary(*(direction / direction.modulus()).components)
        else:
            unit = CANONICAL_I
        w = Quaternion(x, y * unit.x1, y * unit.x2, y * unit.x3)

    translated = regular_translation(f, w)
    f_at_w = translated.coeffs[0]
    deriv_at_w = translated.coeffs[1]
    deriv_scale = deriv_at_w.modulus()
    normalizer = deriv_at_w.conjugate() / deriv_scale
    rotation = deriv_at_w / deriv_scale

    phi_coeffs = [Quaternion(), Quaternion(deriv_scale)]
    phi_coeffs.extend(b * normalizer for b in translated.coeffs[2:])
    phi = Series(tuple(phi_coeffs), radius=s_star, exact=f.exact)
    phi_lemma = phi.with_radius(ball_radius)

    dphi_norm = split_norm(slice_derivative(phi_lemma), **norm_options)
    dphi_bound = 2.0 * math.sqrt(2.0) * r / ball_radius
    if dphi_norm.value > dphi_bound + 1e-6 * dphi_bound:
        raise NumericalSearchError(
            "derivative norm exceeds its guaranteed bound; numerics are inconsistent",
            {"dphi_norm": dphi_norm.to_dict(), "bound": dphi_bound})

    rho_r = ball_radius * deriv_scale * deriv_scale / (4.0 * dphi_norm.value)
    rho_floor = r / (32.0 * math.sqrt(2.0))

    diagnostics = {
        "mu_profile": profile,
        "mu_root_residual": mu_residual,
        "locator_angle": locator_angle,
        "dphi0": deriv_scale,
        "dphi0_target": r / s_star,
        "dphi_norm": dphi_norm.to_dict(),
        "dphi_norm_bound": dphi_bound,
        "normalizer": list(normalizer.components),
        "rho_lower_bound": rho_floor,
        "rho_bound_ok": rho_r >= rho_floor - 1e-6,
        "phi_coeffs": [list(a.components) for a in phi.coeffs],
        "phi_radius": phi.radius,
        "phi_lemma_radius": ball_radius,
    }
    return SearchReport(r=r, R_r=ball_radius, w=w, rotation=rotation,
                        rho_r=rho_r, f_w=f_at_w, diagnostics=diagnostics)


def _argmax_golden(fn, lo: float, hi: float, xatol: float = 1e-10) -> float:
    """Location of the golden-section maximum of fn on [lo, hi]."""
    golden = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - golden * (b - a)
    d = a + golden * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > xatol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - golden * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + golden * (b - a)
            fd = fn(d)
    return 0.5 * (a + b)
