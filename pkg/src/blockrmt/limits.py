"""Limiting spectral laws of ``I_k (x) A_n + W_k (x) B_n``.

When ``mu_{A + tB}`` tends to ``psi(t; .)`` and the spectrum of ``W`` tends to
``mu_omega``, the block matrix spectrum tends to the mixture

    nu(dx) = int psi(t; dx) mu_omega(dt).

The mixture is evaluated against a discretised ``mu_omega`` (a quadrature rule
or a finite atom list).  Two ``psi`` families ship:

* ``semicircle-variance-1-plus-t2`` -- ``A``, ``B`` Gaussian Wigner, so
  ``psi(t) = gamma_{0, 1 + t^2}``;
* ``freeconv-f`` -- ``A`` Gaussian Wigner and ``B`` square Wishart, so
  ``psi(t) = gamma_{0,1} boxplus D_t(rho_1)``.

The Wigner + Gaussian density :func:`g_wigner_gaussian` is computed
independently from its own one-dimensional integral.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from . import freeconv
from .measures import (
    AnalyticDensity,
    DiscreteMeasure,
    QuadratureRule,
    SemicircleLaw,
    gauss_chebyshev_rule,
    mixture,
    semicircle_density,
)

DEFAULT_OMEGA_ORDER = 64
MAX_FINITE_K = 1024
SQRT5 = math.sqrt(5.0)


@dataclass(frozen=True)
class PsiFamily:
    """Limit laws ``psi(t; .)`` of ``A + t B`` indexed by real ``t``.

    ``law`` maps ``t`` to an :class:`AnalyticDensity`; ``evaluate`` is a fast
    vectorised ``(t, x) -> density`` path used by mixtures.
    """

    tag: str
    law: Callable[[float], AnalyticDensity]
    evaluate: Callable[[float, np.ndarray], np.ndarray]

    def support(self, t: float) -> tuple[float, float]:
        return self.law(t).hull

    def support_bound(self, ts: Sequence[float]) -> float:
        """``max |endpoint|`` over the queried ``t`` values."""
        return max(max(abs(a), abs(b)) for a, b in (self.support(t) for t in ts))


def _semicircle_family_law(t: float) -> AnalyticDensity:
    return freeconv.semicircle_convolution(t).to_density()


def _semicircle_family_eval(t: float, x: np.ndarray) -> np.ndarray:
    return np.asarray(semicircle_density(x, 0.0, 1.0 + t * t))


def _freeconv_family_law(t: float) -> AnalyticDensity:
    return freeconv.ConvolutionModel(float(t)).to_density()


def _freeconv_family_eval(t: float, x: np.ndarray) -> np.ndarray:
    return np.asarray(freeconv.psi_density(x, t))


SEMICIRCLE_FAMILY = PsiFamily("semicircle-variance-1-plus-t2", _semicircle_family_law, _semicircle_family_eval)
FREECONV_FAMILY = PsiFamily("freeconv-f", _freeconv_family_law, _freeconv_family_eval)


def tabulated_family(tag: str, law: Callable[[float], AnalyticDensity]) -> PsiFamily:
    """Wrap a user-supplied ``t -> law`` map as a family."""
    return PsiFamily(tag, law, lambda t, x: np.asarray(law(t).pdf(x)))


def _omega_atoms(omega) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(omega, QuadratureRule):
        return omega.nodes, omega.weights
    if isinstance(omega, DiscreteMeasure):
        return omega.locations, omega.weights
    raise TypeError(f"omega must be a QuadratureRule or DiscreteMeasure, got {type(omega).__name__}")


def nu_density(psi: PsiFamily, omega, x):
    """Mixture density ``sum_j w_j psi(t_j; x)`` over the atoms of ``omega``."""
    nodes, weights = _omega_atoms(omega)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if psi is SEMICIRCLE_FAMILY:
        var = 1.0 + nodes[:, None] ** 2
        u = 4.0 * var - x_arr[None, :] ** 2
        vals = np.where(u > 0, np.sqrt(np.maximum(u, 0.0)) / (2.0 * math.pi * var), 0.0)
        out = weights @ vals
    elif psi is FREECONV_FAMILY:
        out = weights @ freeconv.psi_density_grid(nodes, x_arr)
    else:
        out = np.zeros(x_arr.shape)
        for t, w in zip(nodes, weights):
            out += w * psi.evaluate(float(t), x_arr)
    return float(out[0]) if np.ndim(x) == 0 else out


def nu_law(psi: PsiFamily, omega) -> AnalyticDensity:
    """The mixture as a full law (support = union of component supports)."""
    nodes, weights = _omega_atoms(omega)
    w = np.asarray(weights, dtype=float)
    w = w / w.sum()
    comps = [psi.law(float(t)) for t in nodes]
    shape = mixture(comps, w)
    omega_n = DiscreteMeasure(nodes, w)
    return AnalyticDensity(
        "tabulated-mixture",
        lambda x: nu_density(psi, omega_n, x),
        shape.support,
        atoms=shape.atoms,
        breakpoints=shape.breakpoints,
        params={"psi": psi.tag, "omega_atoms": int(nodes.size)},
    )


# ---------------------------------------------------------------------------
# Wigner blocks with a Gaussian Wigner coupling
# ---------------------------------------------------------------------------


def _g_scalar(x: float) -> float:
    ax = abs(x)
    if ax >= 2.0 * SQRT5:
        return 0.0
    if ax > 2.0:
        # sqrt(4(1+t^2) - x^2) = 2 sqrt(t - L) sqrt(t + L); both endpoint roots go to the weight
        lower = math.sqrt(ax * ax / 4.0 - 1.0)
        val, _ = integrate.quad(
            lambda t: 2.0 * math.sqrt(t + lower) * math.sqrt(2.0 + t) / (1.0 + t * t),
            lower, 2.0, weight="alg", wvar=(0.5, 0.5), epsabs=1e-12, epsrel=1e-12,
        )
    else:
        val, _ = integrate.quad(
            lambda t: math.sqrt(4.0 * (1.0 + t * t) - ax * ax) * math.sqrt(2.0 + t) / (1.0 + t * t),
            0.0, 2.0, weight="alg", wvar=(0.0, 0.5), epsabs=1e-12, epsrel=1e-12,
        )
    return val / (2.0 * math.pi**2)


def g_wigner_gaussian(x):
    """Limit density for Gaussian Wigner ``A``, ``B`` and Wigner ``W``.

    Adaptive quadrature of the one-dimensional integral over ``t``; the lower
    limit is ``sqrt(x^2/4 - 1)`` for ``2 <= |x| <= 2 sqrt 5`` and ``0`` for
    ``|x| <= 2``.  Zero beyond ``2 sqrt 5``.
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.array([_g_scalar(float(v)) for v in x_arr.reshape(-1)]).reshape(x_arr.shape)
    return float(out[0]) if np.ndim(x) == 0 else out


def wigner_gaussian_law() -> AnalyticDensity:
    edge = 2.0 * SQRT5
    return AnalyticDensity("wigner-gaussian-g", g_wigner_gaussian, [(-edge, edge)], breakpoints=[-2.0, 2.0])


# ---------------------------------------------------------------------------
# Wigner block plus Wishart block with a Gaussian Wigner coupling
# ---------------------------------------------------------------------------


def g_wigner_wishart(x, omega_rule: QuadratureRule | None = None):
    """``int f(x; t) gamma_{0,1}(dt)`` by the given semicircle quadrature rule.

    Negative nodes use the reflection ``f(x; t) = f(-x; -t)`` and nodes with
    ``|t|`` below ``freeconv.SMALL_T`` the semicircle.
    """
    rule = omega_rule or gauss_chebyshev_rule(DEFAULT_OMEGA_ORDER)
    if not rule.target.startswith("semicircle(0,1)"):
        raise ValueError(f"rule must target the standard semicircle, got {rule.target!r}")
    return nu_density(FREECONV_FAMILY, rule, x)


def wigner_wishart_law(order: int = DEFAULT_OMEGA_ORDER) -> AnalyticDensity:
    law = nu_law(FREECONV_FAMILY, gauss_chebyshev_rule(order))
    law.kind = "wigner-wishart-g"
    return law


def _t_breakpoints(x: float) -> list[float]:
    # f(x; t) > 0 exactly where the support quartic, read as a cubic in t, is positive
    coeffs = [4.0 * x**3, 27.0 - 6.0 * x * x - x**4, -6.0 * x + 2.0 * x**3, 4.0 - x * x]
    roots = np.roots(coeffs) if abs(coeffs[0]) > 0 else np.roots(coeffs[1:])
    pts = [float(r.real) for r in roots if abs(r.imag) < 1e-9 and -2.0 < r.real < 2.0]
    pts += [-freeconv.SMALL_T, 0.0, freeconv.SMALL_T]
    return sorted(set(pts))


def g_wigner_wishart_reference(x) -> np.ndarray:
    """Adaptive-quadrature value of the same integral, split where ``f(x; .)`` has kinks.

    Much slower than :func:`g_wigner_wishart`; used to measure its
    discretisation error.
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty(x_arr.shape)
    for i, xv in enumerate(x_arr.reshape(-1)):
        pts = [-2.0] + _t_breakpoints(float(xv)) + [2.0]
        total = 0.0
        for a, b in zip(pts[:-1], pts[1:]):
            if b <= a:
                continue
            val, _ = integrate.quad(
                lambda t: float(freeconv.psi_density(xv, t)) * float(semicircle_density(t)),
                a, b, epsabs=1e-12, epsrel=1e-10, limit=200,
            )
            total += val
        out.reshape(-1)[i] = total
    return float(out[0]) if np.ndim(x) == 0 else out


# ---------------------------------------------------------------------------
# fixed coupling matrices and commuting blocks
# ---------------------------------------------------------------------------


def finite_k_limit(psi: PsiFamily, k: int) -> AnalyticDensity:
    """Limit for the complete-graph coupling of fixed size ``k``.

    ``((k-1)/k) psi(-1) + (1/k) psi(k-1)``.  The second component's support
    grows linearly in ``k``, hence the cap ``k <= 1024``.
    """
    if int(k) < 1:
        raise ValueError("k must be at least 1")
    if k > MAX_FINITE_K:
        raise ValueError(f"k={k} exceeds the cap {MAX_FINITE_K}")
    if k == 1:
        law = psi.law(0.0)
    else:
        law = mixture([psi.law(-1.0), psi.law(float(k - 1))], [(k - 1) / k, 1.0 / k], kind="finite-k")
    law.params.update({"psi": psi.tag, "k": int(k)})
    return law


def ss_law_measure(alphas: Sequence[float], betas: Sequence[float]) -> AnalyticDensity:
    """``(1/n) sum_j gamma_{alpha_j, beta_j^2}``; ``beta_j = 0`` terms become atoms."""
    a = np.asarray(alphas, dtype=float).reshape(-1)
    b = np.asarray(betas, dtype=float).reshape(-1)
    if a.size != b.size:
        raise ValueError(f"alphas and betas differ in length ({a.size} vs {b.size})")
    if a.size == 0:
        raise ValueError("need at least one component")
    n = a.size
    comps = []
    atoms: dict[float, float] = {}
    for aj, bj in zip(a, b):
        if bj == 0:
            atoms[float(aj)] = atoms.get(float(aj), 0.0) + 1.0 / n
        else:
            comps.append(SemicircleLaw(float(aj), float(bj) ** 2).to_density())
    if comps:
        m = len(comps)
        base = mixture(comps, [1.0 / m] * m)
        scale = m / n
        pdf = lambda x: scale * base.pdf(x)  # noqa: E731
        support, bps = base.support, base.breakpoints
    else:
        pdf = lambda x: np.zeros_like(x)  # noqa: E731
        support, bps = (), ()
    return AnalyticDensity(
        "ss-law", pdf, support, atoms=atoms.items(), breakpoints=bps,
        params={"alphas": a.tolist(), "betas": b.tolist()},
    )


def ss_law(alphas: Sequence[float], betas: Sequence[float], x):
    """Density of the a.c. part of the semicircle mixture at ``x``."""
    return ss_law_measure(alphas, betas).pdf(x)
