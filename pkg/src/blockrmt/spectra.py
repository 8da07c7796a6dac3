"""Dense Hermitian eigenvalues and empirical spectral measures."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .measures import read_csv, write_csv

MAX_ORDER = 8192


class EigensolveError(RuntimeError):
    """LAPACK failed to converge; never silently truncated."""


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_ORDER:
        raise ValueError(f"order {m.shape[0]} exceeds the eigensolve guard {MAX_ORDER}")
    try:
        vals = scipy.linalg.eigh(m, eigvals_only=True, check_finite=True, driver="evd")
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        raise EigensolveError(str(exc)) from exc
    except ValueError as exc:  # non-finite input
        raise EigensolveError(str(exc)) from exc
    return np.sort(np.asarray(vals, dtype=float))


@dataclass(frozen=True, eq=False)
class SpectralMeasure:
    """Uniform measure on a sorted eigenvalue list."""

    eigenvalues: np.ndarray

    def __post_init__(self):
        ev = np.sort(np.asarray(self.eigenvalues, dtype=float).reshape(-1))
        ev.setflags(write=False)
        object.__setattr__(self, "eigenvalues", ev)

    @property
    def order(self) -> int:
        return self.eigenvalues.size

    def moment(self, k: int) -> float:
        return float(np.mean(self.eigenvalues**k))

    def moments(self, kmax: int = 6) -> list[float]:
        return [self.moment(k) for k in range(1, kmax + 1)]

    def histogram(self, bins: int = 100, range_: tuple[float, float] | None = None):
        counts, edges = np.histogram(self.eigenvalues, bins=bins, range=range_)
        return counts, edges

    def to_csv(self, path) -> None:
        write_csv(path, ("index", "eigenvalue"), (np.arange(self.order), self.eigenvalues))

    def histogram_to_csv(self, path, bins: int = 100, range_=None) -> None:
        counts, edges = self.histogram(bins, range_)
        write_csv(path, ("bin_left", "bin_right", "count"), (edges[:-1], edges[1:], counts))

    @classmethod
    def from_csv(cls, path) -> "SpectralMeasure":
        header, cols = read_csv(path)
        if header != ["index", "eigenvalue"]:
            raise ValueError(f"{path}: unexpected header {header}")
        return cls(cols[1])

    @classmethod
    def pooled(cls, parts) -> "SpectralMeasure":
        arrays = [np.asarray(getattr(p, "eigenvalues", p)) for p in parts]
        return cls(np.concatenate(arrays) if arrays else np.empty(0))


def spectral_measure(m: np.ndarray) -> SpectralMeasure:
    return SpectralMeasure(hermitian_eigenvalues(m))
