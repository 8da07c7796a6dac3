"""Free additive convolution of the semicircle with a dilated Marchenko-Pastur law.

For ``t > 0`` the law ``gamma_{0,1} boxplus D_t(rho_1)`` has R-transform
``z + t/(1 - t z)``; its Cauchy transform ``g`` solves the cubic

    t g^3 - (1 + t z) g^2 + z g - 1 = 0,

and Cardano's formula for the root with ``Im g < 0`` gives the closed-form
density :func:`f_closed_form`.  The density is positive exactly where the
quartic :func:`quartic_coefficients` is positive, which pins the support
``[s1(t), s2(t)]``.

:func:`stieltjes_invert` recovers the same density numerically from the
cubic alone and is used as an independent check of the closed form.
"""
from __future__ import annotations

import functools
import math
import threading
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .measures import (
    AnalyticDensity,
    DiscreteMeasure,
    MarchenkoPasturLaw,
    SemicircleLaw,
    semicircle_density,
)

SMALL_T = 1e-3
DEFAULT_EPS = (1e-3, 1e-4, 1e-5, 1e-6)


class RootSelectionError(ArithmeticError):
    """No unique root of the cubic lies in the lower half plane."""


class InversionError(ArithmeticError):
    """Stieltjes inversion did not settle over the epsilon sequence."""


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------


def _branch_sqrt(z, a, b):
    # sqrt((z - a)(z - b)) with the branch that behaves like z at infinity
    return np.sqrt(z - a) * np.sqrt(z - b)


def cauchy_transform(measure, z):
    """``G(z) = int dmu(x) / (z - x)`` for ``Im z > 0``.

    Semicircle and Marchenko-Pastur laws use their closed quadratic-root
    forms; atoms are summed exactly; other densities are integrated
    numerically.
    """
    z_arr = np.asarray(z, dtype=complex)
    if np.any(z_arr.imag <= 0):
        raise ValueError("the Cauchy transform is evaluated on Im z > 0 only")
    if isinstance(measure, SemicircleLaw):
        s2 = measure.variance
        u = z_arr - measure.center
        r = 2.0 * math.sqrt(s2)
        # rationalised (u - sqrt)/(2 s2) avoids cancellation for large |z|
        out = 2.0 / (u + _branch_sqrt(u, -r, r))
    elif isinstance(measure, MarchenkoPasturLaw):
        alpha = measure.mean
        lo, hi = (math.sqrt(alpha) - 1.0) ** 2, (math.sqrt(alpha) + 1.0) ** 2
        out = 2.0 / (z_arr + 1.0 - alpha + _branch_sqrt(z_arr, lo, hi))
    elif isinstance(measure, DiscreteMeasure):
        out = np.sum(measure.weights / (z_arr[..., None] - measure.locations), axis=-1)
    elif isinstance(measure, AnalyticDensity):
        flat = z_arr.reshape(-1)
        vals = np.empty(flat.shape, dtype=complex)
        for i, zi in enumerate(flat):
            re = measure.integrate(lambda x: ((1.0 / (zi - x)).real), epsabs=1e-13)
            im = measure.integrate(lambda x: ((1.0 / (zi - x)).imag), epsabs=1e-13)
            vals[i] = re + 1j * im + sum(w / (zi - loc) for loc, w in measure.atoms)
        out = vals.reshape(z_arr.shape)
    else:
        raise TypeError(f"no Cauchy transform for {type(measure).__name__}")
    return complex(out) if np.ndim(z) == 0 else out


def r_transform(law, z, t: float = 1.0):
    """R-transform of ``D_t(law)``, i.e. ``t R_law(t z)``.

    ``R = alpha + sigma^2 z`` for a semicircle, ``alpha / (1 - z)`` for
    Marchenko-Pastur with mean ``alpha`` (defined away from the pole at
    ``z = 1``).
    """
    z_arr = np.asarray(z, dtype=complex)
    tz = t * z_arr
    if isinstance(law, SemicircleLaw):
        out = t * (law.center + law.variance * tz)
    elif isinstance(law, MarchenkoPasturLaw):
        if np.any(np.abs(1.0 - tz) < 1e-12):
            raise ZeroDivisionError("argument too close to the pole 1 - t z = 0")
        out = t * law.mean / (1.0 - tz)
    else:
        raise TypeError(f"no closed-form R-transform for {type(law).__name__}")
    return complex(out) if np.ndim(z) == 0 else out


def inverse_cauchy(law, z, t: float = 1.0):
    """``K(z) = R(z) + 1/z``, the functional inverse of the Cauchy transform."""
    return r_transform(law, z, t) + 1.0 / np.asarray(z, dtype=complex)


def semicircle_convolution(t: float) -> SemicircleLaw:
    """``gamma_{0,1} boxplus D_t(gamma_{0,1}) = gamma_{0,1+t^2}``."""
    return SemicircleLaw(0.0, 1.0 + float(t) ** 2)


# ---------------------------------------------------------------------------
# the cubic and its inversion
# ---------------------------------------------------------------------------


def cubic_residual(g, z, t):
    return t * g**3 - g**2 * (1.0 + t * z) + g * z - 1.0


def cubic_roots(z, t: float) -> np.ndarray:
    """All three roots of the cubic for every ``z`` (shape ``z.shape + (3,)``)."""
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    flat = z_arr.reshape(-1)
    comp = np.zeros((flat.size, 3, 3), dtype=complex)
    comp[:, 1, 0] = 1.0
    comp[:, 2, 1] = 1.0
    # monic form g^3 + c2 g^2 + c1 g + c0
    comp[:, 0, 2] = 1.0 / t
    comp[:, 1, 2] = -flat / t
    comp[:, 2, 2] = (1.0 + t * flat) / t
    roots = np.linalg.eigvals(comp)
    # Newton polish against the original polynomial
    for _ in range(2):
        p = cubic_residual(roots, flat[:, None], t)
        dp = 3 * t * roots**2 - 2 * roots * (1.0 + t * flat[:, None]) + flat[:, None]
        ok = np.abs(dp) > 1e-300
        roots = np.where(ok, roots - p / np.where(ok, dp, 1.0), roots)
    return roots.reshape(z_arr.shape + (3,))


def solve_cubic_g(z, t: float):
    """Cauchy transform of ``gamma_{0,1} boxplus D_t(rho_1)``: the root with ``Im g < 0``."""
    if not t > 0:
        raise ValueError("t must be positive")
    z_arr = np.asarray(z, dtype=complex)
    if np.any(z_arr.imag <= 0):
        raise ValueError("z must lie in the upper half plane")
    roots = cubic_roots(z_arr, t)
    lower = roots.imag < 0
    count = lower.sum(axis=-1)
    if np.any(count != 1):
        bad = np.atleast_1d(z_arr)[np.atleast_1d(count != 1)][0]
        raise RootSelectionError(f"{int(np.atleast_1d(count)[0])} roots with Im g < 0 at z={bad}, t={t}")
    g = np.take_along_axis(roots, np.argmax(lower, axis=-1)[..., None], axis=-1)[..., 0]
    return complex(g.reshape(())) if np.ndim(z) == 0 else g.reshape(z_arr.shape)


def stieltjes_invert(t: float, x, eps_sequence: Sequence[float] = DEFAULT_EPS):
    """Density at ``x`` from ``-Im g(x + i eps) / pi``, Richardson-extrapolated in ``eps``.

    The last two levels are combined assuming an error linear in ``eps``.
    """
    eps = [float(e) for e in eps_sequence]
    if len(eps) < 2 or any(e <= 0 for e in eps) or any(b >= a for a, b in zip(eps, eps[1:])):
        raise ValueError("eps_sequence must be a decreasing sequence of positive numbers")
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    e1, e2 = eps[-2], eps[-1]
    d1 = -solve_cubic_g(x_arr + 1j * e1, t).imag / math.pi
    d2 = -solve_cubic_g(x_arr + 1j * e2, t).imag / math.pi
    if np.any(np.abs(d2 - d1) > 1e-3):
        worst = x_arr[np.argmax(np.abs(d2 - d1))]
        raise InversionError(f"inversion not converged near x={worst}, t={t}")
    out = np.maximum((e1 * d2 - e2 * d1) / (e1 - e2), 0.0)
    return float(out[0]) if np.ndim(x) == 0 else out


# ---------------------------------------------------------------------------
# closed form and support
# ---------------------------------------------------------------------------


def h1(x, t):
    return 2.0 + 27.0 * t**2 - 3.0 * t * x - 3.0 * t**2 * x**2 + 2.0 * t**3 * x**3


def h2(x, t):
    return 1.0 - t * x + t**2 * x**2


def quartic_coefficients(t: float) -> np.ndarray:
    """Coefficients, highest degree first, of the quartic whose real roots bound the support.

    ``h1^2 - 4 h2^3`` equals ``27 t^2`` times this polynomial.
    """
    return np.array([-t**2, 2.0 * t + 4.0 * t**3, -1.0 - 6.0 * t**2, -6.0 * t, 4.0 + 27.0 * t**2])


def quartic(x, t):
    return np.polyval(quartic_coefficients(t), x)


class SupportError(ArithmeticError):
    """The quartic did not show exactly two real roots."""


@functools.lru_cache(maxsize=4096)
def support_endpoints(t: float) -> tuple[float, float]:
    """Real roots ``s1 < s2`` of the support quartic, for ``t > 0``.

    Roots come from companion-matrix eigenvalues; the two roots with
    ``|Im| <= 1e-8 * scale`` are kept and Newton-polished.
    """
    t = float(t)
    if not t > 0:
        raise ValueError("support endpoints are defined for t > 0")
    coeffs = quartic_coefficients(t)
    roots = np.roots(coeffs)
    scale = max(1.0, float(np.max(np.abs(roots))))
    real = np.sort(roots[np.abs(roots.imag) <= 1e-8 * scale].real)
    if real.size != 2:
        raise SupportError(f"expected 2 real roots at t={t}, found {real.size}: {roots}")
    dcoeffs = np.polyder(coeffs)
    polished = []
    for r in real:
        for _ in range(4):
            d = np.polyval(dcoeffs, r)
            if d == 0:
                break
            step = np.polyval(coeffs, r) / d
            r -= step
            if abs(step) <= 1e-16 * max(1.0, abs(r)):
                break
        polished.append(float(r))
    s1, s2 = sorted(polished)
    return s1, s2


def support_interval(t: float) -> tuple[float, float]:
    """Support of ``gamma_{0,1} boxplus D_t(rho_1)`` for any real ``t``."""
    t = float(t)
    if abs(t) < SMALL_T:
        # the model uses the semicircle here, matching the density switch
        return -2.0, 2.0
    if t < 0:
        s1, s2 = support_endpoints(-t)
        return -s2, -s1
    return support_endpoints(t)


_fallback_lock = threading.Lock()
BRANCH_FALLBACKS: list[tuple[float, float, float]] = []


def _f_positive_t(x: np.ndarray, t: float) -> np.ndarray:
    s1, s2 = support_endpoints(t)
    inside = (x > s1) & (x < s2)
    out = np.zeros(x.shape)
    if not inside.any():
        return out
    xi = x[inside]
    a = h1(xi, t)
    b = h2(xi, t)
    disc = (a * a - 4.0 * b**3).astype(complex)
    big_h = ((a + np.sqrt(disc)) / 2.0) ** (1.0 / 3.0)
    val = (big_h - b / big_h) / (2.0 * math.sqrt(3.0) * math.pi * t)
    bad = (np.abs(val.imag) > 1e-9 * (1.0 + np.abs(val.real))) | (val.real < -1e-10)
    res = val.real
    if bad.any():
        xb = xi[bad]
        with _fallback_lock:
            BRANCH_FALLBACKS.append((t, float(xb.min()), float(xb.max())))
        res = res.copy()
        res[bad] = stieltjes_invert(t, xb)
    out[inside] = np.maximum(res, 0.0)
    return out


def f_closed_form(x, t: float, small_t: float = SMALL_T):
    """Density of ``gamma_{0,1} boxplus D_t(rho_1)`` at ``x``.

    Uses the Cardano closed form with the principal complex branch, masked to
    ``[s1(t), s2(t)]``; points where that branch is not real are recomputed by
    :func:`stieltjes_invert` and logged in ``BRANCH_FALLBACKS``.  Negative
    ``t`` is reflected, ``f(x; t) = f(-x; -t)``, and ``|t| < small_t`` returns
    the standard semicircle density.
    """
    t = float(t)
    if t == 0.0:
        raise ValueError("t = 0 is the semicircle law itself; use semicircle_density")
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if abs(t) < small_t:
        out = np.asarray(semicircle_density(x_arr, 0.0, 1.0))
    elif t > 0:
        out = _f_positive_t(x_arr, t)
    else:
        out = _f_positive_t(-x_arr, -t)
    return float(out[0]) if np.ndim(x) == 0 else out.reshape(np.shape(x))


def psi_density(x, t: float, small_t: float = SMALL_T):
    """``f(x; t)`` extended to ``t = 0`` by the semicircle."""
    if float(t) == 0.0 or abs(float(t)) < small_t:
        return semicircle_density(x, 0.0, 1.0)
    return f_closed_form(x, t, small_t)


def psi_density_grid(ts, x, small_t: float = SMALL_T) -> np.ndarray:
    """``psi_density`` for every pair, shape ``(len(ts), len(x))``.

    Same branch handling as :func:`f_closed_form`, evaluated in one pass.
    """
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.zeros((ts.size, x.size))
    small = np.abs(ts) < small_t
    if small.any():
        out[small] = np.asarray(semicircle_density(x, 0.0, 1.0))[None, :]
    big = ~small
    if not big.any():
        return out
    tb = ts[big]
    sign = np.sign(tb)[:, None]
    ta = np.abs(tb)[:, None]
    xr = sign * x[None, :]
    ends = np.array([support_endpoints(float(v)) for v in ta[:, 0]])
    inside = (xr > ends[:, :1]) & (xr < ends[:, 1:])
    ti = np.broadcast_to(ta, xr.shape)[inside]
    xi = xr[inside]
    a = h1(xi, ti)
    b = h2(xi, ti)
    big_h = ((a + np.sqrt((a * a - 4.0 * b**3).astype(complex))) / 2.0) ** (1.0 / 3.0)
    val = (big_h - b / big_h) / (2.0 * math.sqrt(3.0) * math.pi * ti)
    res = val.real.copy()
    bad = (np.abs(val.imag) > 1e-9 * (1.0 + np.abs(val.real))) | (val.real < -1e-10)
    if bad.any():
        for tv in np.unique(ti[bad]):
            sel = bad & (ti == tv)
            with _fallback_lock:
                BRANCH_FALLBACKS.append((float(tv), float(xi[sel].min()), float(xi[sel].max())))
            res[sel] = stieltjes_invert(float(tv), xi[sel])
    block = np.zeros(xr.shape)
    block[inside] = np.maximum(res, 0.0)
    out[big] = block
    return out


@dataclass
class ConvolutionModel:
    """``gamma_{0,1} boxplus D_t(rho_1)`` for a fixed real ``t``.

    ``mode`` selects ``"closed-form"`` evaluation or ``"numeric-inversion"``
    (positive ``t`` only for the latter).
    """

    t: float
    mode: str = "closed-form"
    s1: float = field(init=False)
    s2: float = field(init=False)

    def __post_init__(self):
        if self.mode not in ("closed-form", "numeric-inversion"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "numeric-inversion" and not self.t > 0:
            raise ValueError("numeric inversion is implemented for t > 0")
        self.s1, self.s2 = support_interval(self.t)

    def density(self, x):
        if self.mode == "numeric-inversion":
            x_arr = np.atleast_1d(np.asarray(x, dtype=float))
            out = np.zeros(x_arr.shape)
            inside = (x_arr > self.s1) & (x_arr < self.s2)
            if inside.any():
                out[inside] = stieltjes_invert(self.t, x_arr[inside])
            return float(out[0]) if np.ndim(x) == 0 else out
        return psi_density(x, self.t)

    def cauchy(self, z):
        if self.t > 0:
            return solve_cubic_g(z, self.t)
        if self.t == 0:
            return cauchy_transform(SemicircleLaw(), z)
        # D_{-1} reflection: G_{D_{-1}mu}(z) = -G_mu(-z), and -conj(z) stays in the upper half plane
        return -np.conj(solve_cubic_g(-np.conj(np.asarray(z, dtype=complex)), -self.t))

    def to_density(self) -> AnalyticDensity:
        return AnalyticDensity(
            "free-conv-f",
            self.density,
            [(self.s1, self.s2)],
            params={"t": self.t, "s1": self.s1, "s2": self.s2},
        )
