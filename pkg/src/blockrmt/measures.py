"""Probability measures on the real line.

Three flavours are supported:

* :class:`DiscreteMeasure` -- finitely many weighted atoms.
* :class:`SemicircleLaw` and :class:`MarchenkoPasturLaw` -- the two classical
  limit laws, kept as small parameter objects.
* :class:`AnalyticDensity` -- a general absolutely continuous law (optionally
  with atoms) given by a vectorised density and an explicit support.  Every
  derived law in the package (free convolutions, mixtures, ...) ends up here.

Densities are exactly zero outside their declared support.  Square-root edges
are handled by integrating in the angle variable ``x = a + (b - a)(1 - cos u)/2``
on every smooth piece, which turns the edge singularities into smooth
integrands.
"""
from __future__ import annotations

import csv
import math
import threading
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

import numpy as np
from scipy import integrate

MAX_MOMENT_ORDER = 64
CDF_TABLE_POINTS = 4096

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(8)


def _scalar_or_array(x_in, values):
    if np.ndim(x_in) == 0:
        return float(values)
    return values


# ---------------------------------------------------------------------------
# discrete measures
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """A finite list of atoms ``sum_i w_i delta_{x_i}``.

    Weights must be nonnegative and sum to one within ``1e-12``.  Atoms are
    stored sorted by location; coincident locations are kept as given.
    """

    locations: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        loc = np.asarray(self.locations, dtype=float).reshape(-1)
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        if loc.shape != w.shape:
            raise ValueError("locations and weights must have the same length")
        if loc.size == 0:
            raise ValueError("a discrete measure needs at least one atom")
        if not np.all(np.isfinite(loc)):
            raise ValueError("atom locations must be finite")
        if np.any(w < 0):
            raise ValueError("atom weights must be nonnegative")
        if abs(w.sum() - 1.0) > 1e-12:
            raise ValueError(f"atom weights sum to {w.sum()!r}, expected 1")
        order = np.argsort(loc, kind="stable")
        loc, w = loc[order], w[order]
        loc.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "locations", loc)
        object.__setattr__(self, "weights", w)

    @classmethod
    def point(cls, x: float = 0.0) -> "DiscreteMeasure":
        return cls(np.array([x]), np.array([1.0]))

    @classmethod
    def from_atoms(cls, atoms: Iterable[tuple[float, float]]) -> "DiscreteMeasure":
        pairs = list(atoms)
        return cls(np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs]))

    @classmethod
    def uniform(cls, points: Sequence[float]) -> "DiscreteMeasure":
        pts = np.asarray(points, dtype=float)
        return cls(pts, np.full(pts.size, 1.0 / pts.size))

    def atoms(self) -> list[tuple[float, float]]:
        return list(zip(self.locations.tolist(), self.weights.tolist()))

    def mass(self) -> float:
        return float(self.weights.sum())

    def moment(self, k: int) -> float:
        return float(np.dot(self.weights, self.locations**k))

    def cdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        cum = np.concatenate([[0.0], np.cumsum(self.weights)])
        idx = np.searchsorted(self.locations, x_arr, side="right")
        return _scalar_or_array(x, np.minimum(cum[idx], 1.0))

    def support(self) -> tuple[float, float]:
        return float(self.locations[0]), float(self.locations[-1])


# ---------------------------------------------------------------------------
# classical laws
# ---------------------------------------------------------------------------


def semicircle_density(x, center: float = 0.0, variance: float = 1.0):
    """Semicircle density of the given center and variance.

    Zero outside ``[center - 2 sigma, center + 2 sigma]``.
    """
    if not variance > 0:
        raise ValueError(f"variance must be positive, got {variance!r}")
    x_arr = np.asarray(x, dtype=float)
    u = 4.0 * variance - (x_arr - center) ** 2
    out = np.where(u > 0, np.sqrt(np.maximum(u, 0.0)) / (2.0 * math.pi * variance), 0.0)
    return _scalar_or_array(x, out)


def marchenko_pastur_edges(mean: float) -> tuple[float, float]:
    r = math.sqrt(mean)
    return (r - 1.0) ** 2, (r + 1.0) ** 2


def marchenko_pastur_density(x, mean: float = 1.0):
    """Marchenko-Pastur law with the given mean.

    Returns ``(atom_mass_at_zero, density_value)``; the atom ``(1 - mean)^+``
    is never folded into the density.
    """
    if not mean > 0:
        raise ValueError(f"mean must be positive, got {mean!r}")
    lo, hi = marchenko_pastur_edges(mean)
    x_arr = np.asarray(x, dtype=float)
    inside = (x_arr > lo) & (x_arr < hi) & (x_arr > 0)
    safe = np.where(inside, x_arr, 1.0)
    val = np.sqrt(np.maximum((safe - lo) * (hi - safe), 0.0)) / (2.0 * math.pi * safe)
    return max(1.0 - mean, 0.0), _scalar_or_array(x, np.where(inside, val, 0.0))


@dataclass(frozen=True)
class SemicircleLaw:
    center: float = 0.0
    variance: float = 1.0

    def __post_init__(self):
        if not self.variance > 0:
            raise ValueError(f"variance must be positive, got {self.variance!r}")

    @property
    def radius(self) -> float:
        return 2.0 * math.sqrt(self.variance)

    @property
    def support(self) -> tuple[float, float]:
        return self.center - self.radius, self.center + self.radius

    def pdf(self, x):
        return semicircle_density(x, self.center, self.variance)

    def to_density(self) -> "AnalyticDensity":
        return AnalyticDensity(
            "semicircle",
            lambda x: semicircle_density(x, self.center, self.variance),
            [self.support],
            params={"center": self.center, "variance": self.variance},
        )


@dataclass(frozen=True)
class MarchenkoPasturLaw:
    mean: float = 1.0

    def __post_init__(self):
        if not self.mean > 0:
            raise ValueError(f"mean must be positive, got {self.mean!r}")

    @property
    def atom_mass(self) -> float:
        return max(1.0 - self.mean, 0.0)

    @property
    def support(self) -> tuple[float, float]:
        return marchenko_pastur_edges(self.mean)

    def pdf(self, x):
        return marchenko_pastur_density(x, self.mean)[1]

    def to_density(self) -> "AnalyticDensity":
        atoms = [(0.0, self.atom_mass)] if self.atom_mass > 0 else []
        return AnalyticDensity(
            "marchenko-pastur",
            lambda x: marchenko_pastur_density(x, self.mean)[1],
            [self.support],
            atoms=atoms,
            params={"mean": self.mean},
        )


# ---------------------------------------------------------------------------
# general densities
# ---------------------------------------------------------------------------


def _merge_intervals(intervals: Iterable[tuple[float, float]]) -> list[tuple[float, float]]:
    ivs = sorted((float(a), float(b)) for a, b in intervals if b > a)
    merged: list[list[float]] = []
    for a, b in ivs:
        if merged and a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    return [(a, b) for a, b in merged]


class AnalyticDensity:
    """An absolutely continuous law with optional atoms.

    Parameters
    ----------
    kind : str
        Tag naming the family (``"semicircle"``, ``"free-conv-f"``, ...).
    pdf : callable
        Vectorised density; called with 1-d float arrays.  Values outside the
        declared support are discarded, negative values are clipped at zero.
    support : sequence of (a, b)
        Intervals carrying the a.c. part.  Overlapping intervals are merged.
    atoms : sequence of (location, weight), optional
        Point masses; together with the a.c. part they must total one.
    breakpoints : sequence of float, optional
        Interior points where the density is not smooth (component edges of a
        mixture).  Integration and the CDF table split there.
    params : dict, optional
        Parameters echoed in reports and sidecars.

    Notes
    -----
    The CDF is tabulated lazily on first use (``CDF_TABLE_POINTS`` nodes in
    angle coordinates per piece, linear interpolation) and then shared by all
    readers; construction is guarded by a lock.
    """

    def __init__(
        self,
        kind: str,
        pdf: Callable[[np.ndarray], np.ndarray],
        support: Iterable[tuple[float, float]],
        *,
        atoms: Iterable[tuple[float, float]] = (),
        breakpoints: Iterable[float] = (),
        params: dict | None = None,
    ):
        self.kind = kind
        self._pdf = pdf
        self.support = tuple(_merge_intervals(support))
        atom_list = [(float(x), float(w)) for x, w in atoms if w > 0]
        atom_list.sort()
        self.atoms = tuple(atom_list)
        if any(w < 0 for _, w in self.atoms):
            raise ValueError("atom weights must be nonnegative")
        self.params = dict(params or {})
        cuts = set()
        for a, b in self.support:
            cuts.update((a, b))
        for p in breakpoints:
            p = float(p)
            if any(a < p < b for a, b in self.support):
                cuts.add(p)
        self.breakpoints = tuple(sorted(cuts))
        self._lock = threading.Lock()
        self._table = None
        self._mass = None

    def __repr__(self):
        return f"AnalyticDensity(kind={self.kind!r}, support={self.support}, atoms={self.atoms})"

    # -- evaluation ---------------------------------------------------------

    def pdf(self, x):
        x_arr = np.atleast_1d(np.asarray(x, dtype=float))
        inside = np.zeros(x_arr.shape, dtype=bool)
        for a, b in self.support:
            inside |= (x_arr >= a) & (x_arr <= b)
        out = np.zeros(x_arr.shape)
        if inside.any():
            vals = np.asarray(self._pdf(x_arr[inside]), dtype=float)
            out[inside] = np.maximum(np.nan_to_num(vals, nan=0.0), 0.0)
        return _scalar_or_array(x, out.reshape(np.shape(x)) if np.ndim(x) else out[0])

    __call__ = pdf

    def pieces(self) -> list[tuple[float, float]]:
        """Consecutive breakpoint intervals that lie inside the support."""
        bps = self.breakpoints
        out = []
        for a, b in zip(bps[:-1], bps[1:]):
            mid = 0.5 * (a + b)
            if any(lo <= mid <= hi for lo, hi in self.support):
                out.append((a, b))
        return out

    @property
    def atom_mass(self) -> float:
        return float(sum(w for _, w in self.atoms))

    @property
    def hull(self) -> tuple[float, float]:
        """Smallest interval containing the support and all atoms."""
        pts = [p for iv in self.support for p in iv] + [x for x, _ in self.atoms]
        return min(pts), max(pts)

    def integrate(self, fn: Callable[[float], float] | None = None, *, epsabs: float = 1e-12) -> float:
        """Adaptive Gauss-Kronrod integral of ``fn(x) * pdf(x)`` over the a.c. part."""
        total = 0.0
        for a, b in self.pieces():
            half = 0.5 * (b - a)

            def integrand(u, a=a, half=half):
                x = a + half * (1.0 - math.cos(u))
                v = float(self.pdf(x)) * half * math.sin(u)
                return v * fn(x) if fn is not None else v

            val, _ = integrate.quad(integrand, 0.0, math.pi, epsabs=epsabs, epsrel=1e-12, limit=200)
            total += val
        return total

    def mass(self) -> float:
        if self._mass is None:
            self._mass = self.atom_mass + self.integrate()
        return self._mass

    def moment(self, k: int) -> float:
        return moment(self, k)

    # -- cdf table ----------------------------------------------------------

    def _cdf_table(self):
        if self._table is not None:
            return self._table
        with self._lock:
            if self._table is None:
                self._table = self._build_table()
        return self._table

    def _build_table(self):
        pieces = self.pieces()
        lengths = np.array([b - a for a, b in pieces])
        total = lengths.sum() if pieces else 0.0
        starts, ends, thetas, cums = [], [], [], []
        for (a, b), length in zip(pieces, lengths):
            m = max(32, int(round(CDF_TABLE_POINTS * length / total)))
            theta = np.linspace(0.0, math.pi, m + 1)
            lo, hi = theta[:-1], theta[1:]
            mid, rad = 0.5 * (lo + hi), 0.5 * (hi - lo)
            u = mid[:, None] + rad[:, None] * _GL_NODES[None, :]
            half = 0.5 * (b - a)
            x = a + half * (1.0 - np.cos(u))
            vals = self.pdf(x.reshape(-1)).reshape(x.shape) * half * np.sin(u)
            panel = (vals * _GL_WEIGHTS[None, :]).sum(axis=1) * rad
            starts.append(a)
            ends.append(b)
            thetas.append(theta)
            cums.append(np.concatenate([[0.0], np.cumsum(panel)]))
        offsets = np.concatenate([[0.0], np.cumsum([c[-1] for c in cums])]) if cums else np.zeros(1)
        return {
            "starts": np.array(starts),
            "ends": np.array(ends),
            "thetas": thetas,
            "cums": cums,
            "offsets": offsets,
        }

    def _ac_cdf(self, x: np.ndarray) -> np.ndarray:
        tab = self._cdf_table()
        out = np.zeros(x.shape)
        if not len(tab["starts"]):
            return out
        idx = np.searchsorted(tab["starts"], x, side="right") - 1
        below = idx < 0
        idx = np.clip(idx, 0, len(tab["starts"]) - 1)
        for p in np.unique(idx):
            sel = idx == p
            a, b = tab["starts"][p], tab["ends"][p]
            xs = x[sel]
            frac = np.clip((xs - a) / (b - a), 0.0, 1.0)
            th = np.arccos(np.clip(1.0 - 2.0 * frac, -1.0, 1.0))
            out[sel] = tab["offsets"][p] + np.interp(th, tab["thetas"][p], tab["cums"][p])
        out[below] = 0.0
        return out

    def cdf(self, x):
        x_arr = np.atleast_1d(np.asarray(x, dtype=float))
        out = self._ac_cdf(x_arr)
        for loc, w in self.atoms:
            out = out + np.where(x_arr >= loc, w, 0.0)
        out = np.clip(out, 0.0, 1.0)
        return _scalar_or_array(x, out.reshape(np.shape(x)) if np.ndim(x) else out[0])

    def cdf_left(self, x):
        """Left limit ``F(x-)``; differs from :meth:`cdf` only at atoms."""
        x_arr = np.atleast_1d(np.asarray(x, dtype=float))
        out = self._ac_cdf(x_arr)
        for loc, w in self.atoms:
            out = out + np.where(x_arr > loc, w, 0.0)
        out = np.clip(out, 0.0, 1.0)
        return _scalar_or_array(x, out.reshape(np.shape(x)) if np.ndim(x) else out[0])

    def ppf(self, q):
        """Quantile function (generalised inverse of the CDF)."""
        q_arr = np.atleast_1d(np.asarray(q, dtype=float))
        if np.any((q_arr < 0) | (q_arr > 1)):
            raise ValueError("quantile levels must lie in [0, 1]")
        lo_h, hi_h = self.hull
        grid = [np.array([lo_h, hi_h])]
        tab = self._cdf_table()
        for a, b, th in zip(tab["starts"], tab["ends"], tab["thetas"]):
            grid.append(a + 0.5 * (b - a) * (1.0 - np.cos(th)))
        xs = np.unique(np.concatenate(grid + [np.array([x for x, _ in self.atoms])]))
        fr = self.cdf(xs)
        fl = self.cdf_left(xs)
        # each atom contributes a vertical segment (F(x-), F(x)) at x
        px = np.repeat(xs, 2)
        pf = np.empty(px.size)
        pf[0::2], pf[1::2] = fl, fr
        pf = np.maximum.accumulate(pf)
        # keep the first occurrence of every level so interpolation is well-defined
        keep = np.concatenate([[True], np.diff(pf) > 0])
        xq = np.interp(q_arr, pf[keep], px[keep])
        # Newton polish on the continuous part
        for _ in range(3):
            dens = self.pdf(xq)
            ok = dens > 1e-10
            step = np.where(ok, (self.cdf(xq) - q_arr) / np.where(ok, dens, 1.0), 0.0)
            xq = np.clip(xq - np.clip(step, -0.05 * (hi_h - lo_h), 0.05 * (hi_h - lo_h)), lo_h, hi_h)
        return _scalar_or_array(q, xq.reshape(np.shape(q)) if np.ndim(q) else xq[0])

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Inverse-CDF sampling."""
        return np.atleast_1d(self.ppf(rng.random(size)))

    def grid_table(self, x: np.ndarray, what: str = "density") -> np.ndarray:
        if what == "density":
            return np.atleast_1d(self.pdf(x))
        if what == "cdf":
            return np.atleast_1d(self.cdf(x))
        raise ValueError(f"unknown table kind {what!r}")


Measure = Union[DiscreteMeasure, AnalyticDensity, SemicircleLaw, MarchenkoPasturLaw]


def as_density(measure) -> AnalyticDensity:
    if isinstance(measure, AnalyticDensity):
        return measure
    if isinstance(measure, (SemicircleLaw, MarchenkoPasturLaw)):
        return measure.to_density()
    if isinstance(measure, DiscreteMeasure):
        return AnalyticDensity("discrete", lambda x: np.zeros_like(x), [], atoms=measure.atoms())
    raise TypeError(f"not a measure: {type(measure).__name__}")


def mixture(
    components: Sequence[AnalyticDensity],
    weights: Sequence[float],
    kind: str = "tabulated-mixture",
    params: dict | None = None,
) -> AnalyticDensity:
    """Convex combination ``sum_j w_j mu_j`` of densities (atoms included)."""
    comps = [as_density(c) for c in components]
    w = np.asarray(weights, dtype=float)
    if len(comps) != w.size:
        raise ValueError("one weight per component is required")
    if np.any(w < 0) or abs(w.sum() - 1.0) > 1e-12:
        raise ValueError("mixture weights must be nonnegative and sum to 1")
    keep = [(c, wj) for c, wj in zip(comps, w) if wj > 0]

    def pdf(x):
        total = np.zeros_like(x)
        for c, wj in keep:
            total += wj * c.pdf(x)
        return total

    atoms: dict[float, float] = {}
    for c, wj in keep:
        for loc, aw in c.atoms:
            atoms[loc] = atoms.get(loc, 0.0) + wj * aw
    support = [iv for c, _ in keep for iv in c.support]
    bps = [p for c, _ in keep for p in c.breakpoints]
    return AnalyticDensity(kind, pdf, support, atoms=atoms.items(), breakpoints=bps, params=params)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def moment(measure: Measure, k: int) -> float:
    """``k``-th moment ``int x^k dmu``.

    Exact weighted power sum for atoms; adaptive quadrature on every smooth
    piece of a density.
    """
    if k < 0 or int(k) != k:
        raise ValueError("moment order must be a nonnegative integer")
    if k > MAX_MOMENT_ORDER:
        raise ValueError(f"moment order {k} exceeds the guard {MAX_MOMENT_ORDER}")
    k = int(k)
    if isinstance(measure, DiscreteMeasure):
        return measure.moment(k)
    dens = as_density(measure)
    mass = dens.mass()
    if abs(mass - 1.0) > 1e-6:
        raise ValueError(f"measure is not normalised (mass {mass!r})")
    if k == 0:
        return float(mass)
    total = sum(w * loc**k for loc, w in dens.atoms)
    total += dens.integrate(lambda x: x**k)
    return float(total)


def dilate(measure: Measure, t: float):
    """Push-forward of ``measure`` under ``x -> t x``; ``delta_0`` when ``t == 0``."""
    t = float(t)
    if t == 0.0:
        return DiscreteMeasure.point(0.0)
    if isinstance(measure, DiscreteMeasure):
        return DiscreteMeasure(measure.locations * t, measure.weights)
    if isinstance(measure, SemicircleLaw):
        return SemicircleLaw(measure.center * t, measure.variance * t * t)
    dens = as_density(measure)
    base = dens

    def pdf(x):
        return base.pdf(x / t) / abs(t)

    support = [tuple(sorted((a * t, b * t))) for a, b in dens.support]
    return AnalyticDensity(
        f"dilated-{dens.kind}",
        pdf,
        support,
        atoms=[(loc * t, w) for loc, w in dens.atoms],
        breakpoints=[p * t for p in dens.breakpoints],
        params={**dens.params, "dilation": t},
    )


def ks_distance(empirical, theory) -> float:
    """Kolmogorov-Smirnov distance between an empirical spectrum and a law.

    ``empirical`` is a spectral measure or a 1-d array of eigenvalues; the sup
    is taken over the empirical jump points, using both one-sided limits of
    the theoretical CDF so that atoms are handled exactly.
    """
    eig = getattr(empirical, "eigenvalues", empirical)
    x = np.sort(np.asarray(eig, dtype=float).reshape(-1))
    n = x.size
    if n == 0:
        raise ValueError("empirical measure is empty")
    if isinstance(theory, DiscreteMeasure):
        f_right = np.asarray(theory.cdf(x))
        f_left = np.asarray(theory.cdf(np.nextafter(x, -np.inf)))
    else:
        dens = as_density(theory)
        f_right = np.atleast_1d(dens.cdf(x))
        f_left = np.atleast_1d(dens.cdf_left(x))
    # ecdf just after / just before each distinct jump
    upper = np.searchsorted(x, x, side="right") / n
    lower = np.searchsorted(x, x, side="left") / n
    d = max(np.max(np.abs(upper - f_right)), np.max(np.abs(f_left - lower)))
    return float(min(max(d, 0.0), 1.0))


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes and nonnegative weights discretising a target measure.

    ``degree`` is the highest polynomial degree integrated exactly.
    """

    nodes: np.ndarray
    weights: np.ndarray
    target: str
    degree: int

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.shape != weights.shape or nodes.ndim != 1:
            raise ValueError("nodes and weights must be 1-d arrays of equal length")
        if np.any(weights < 0):
            raise ValueError("quadrature weights must be nonnegative")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @property
    def order(self) -> int:
        return self.nodes.size

    def integrate(self, fn: Callable[[np.ndarray], np.ndarray]) -> float:
        return float(np.dot(self.weights, fn(self.nodes)))

    def as_measure(self) -> DiscreteMeasure:
        w = self.weights / self.weights.sum()
        return DiscreteMeasure(self.nodes, w)


def gauss_chebyshev_rule(order: int) -> QuadratureRule:
    """Gauss rule for the standard semicircle law.

    Nodes ``2 cos(j pi/(N+1))`` and weights ``2 sin^2(j pi/(N+1))/(N+1)``,
    ``j = 1..N``; exact for polynomials of degree ``2N - 1``.
    """
    if int(order) != order or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")
    j = np.arange(1, order + 1)
    ang = j * math.pi / (order + 1)
    nodes = 2.0 * np.cos(ang)
    weights = 2.0 / (order + 1) * np.sin(ang) ** 2
    # ascending order
    return QuadratureRule(nodes[::-1].copy(), weights[::-1].copy(), "semicircle(0,1)", 2 * order - 1)


# ---------------------------------------------------------------------------
# CSV export
# ---------------------------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def write_csv(path, header: Sequence[str], columns: Sequence[Sequence]) -> None:
    """Write columns under ``header`` with round-trip float formatting."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in zip(*columns):
            writer.writerow([_fmt(v) for v in row])


def read_csv(path) -> tuple[list[str], list[np.ndarray]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [r for r in reader]
    cols = [np.array([float(r[i]) for r in rows]) for i in range(len(header))]
    return header, cols


def export_density_csv(path, density: Measure, x: np.ndarray, what: str = "density") -> None:
    """Tabulate a law on ``x`` as ``x,density`` or ``x,cdf``."""
    dens = as_density(density)
    x = np.asarray(x, dtype=float)
    write_csv(path, ("x", what), (x, dens.grid_table(x, what)))
