"""Seeded samplers for Wigner, Gaussian Wigner (GUE) and Wishart matrices.

All ensembles use the ``1/n`` variance scaling, so Wigner spectra converge to
the standard semicircle and ``Wishart(n, n)`` spectra to Marchenko-Pastur
with mean one.

Randomness comes from :func:`rng_for`, which derives an independent PCG64
stream for every ``(master seed, stream index)`` pair through
:class:`numpy.random.SeedSequence` spawn keys.  A sample is therefore a pure
function of ``(spec, seed)`` and does not depend on which worker draws it.

Hermitian matrices are plain complex ``ndarray``\\ s assembled from the upper
triangle and mirrored, so conjugate symmetry holds exactly.
"""
from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field

import numpy as np

KINDS = ("wigner-rademacher", "wigner-gaussian", "gue", "wishart")

MATRIX_MAGIC = b"BRMTHERM"


@dataclass(frozen=True)
class RngSeed:
    """A master seed plus a stream index; equal pairs give equal streams."""

    master: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= int(self.master) < 2**64:
            raise ValueError("master seed must be a 64-bit unsigned integer")
        if int(self.stream) < 0:
            raise ValueError("stream index must be nonnegative")

    def generator(self) -> np.random.Generator:
        return rng_for(self.master, self.stream)


def rng_for(master: int, stream: int = 0) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=int(master), spawn_key=(int(stream),))
    return np.random.Generator(np.random.PCG64(ss))


def _as_generator(seed) -> np.random.Generator:
    if isinstance(seed, RngSeed):
        return seed.generator()
    if isinstance(seed, np.random.Generator):
        return seed
    return rng_for(int(seed), 0)


@dataclass(frozen=True)
class EnsembleSpec:
    """Which random matrix to draw.

    ``p`` is the row count of ``X`` for Wishart matrices ``X^* X`` and is
    ignored otherwise.
    """

    kind: str
    n: int
    p: int | None = field(default=None)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}; expected one of {KINDS}")
        if int(self.n) < 1:
            raise ValueError("matrix order n must be at least 1")
        if self.kind == "wishart":
            if self.p is None:
                object.__setattr__(self, "p", int(self.n))
            if int(self.p) < 1:
                raise ValueError("wishart shape p must be at least 1")

    def sample(self, seed) -> np.ndarray:
        if self.kind == "wigner-rademacher":
            return sample_wigner(self.n, "rademacher", seed)
        if self.kind in ("wigner-gaussian", "gue"):
            return sample_wigner(self.n, "gaussian", seed)
        return sample_wishart(self.n, self.p, seed)


def hermitian_from_upper(upper: np.ndarray) -> np.ndarray:
    """Mirror the strict upper triangle and take the real part of the diagonal."""
    upper = np.asarray(upper, dtype=complex)
    strict = np.triu(upper, 1)
    out = strict + strict.conj().T
    out[np.diag_indices_from(out)] = upper.diagonal().real
    return out


def is_exactly_hermitian(m: np.ndarray) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and bool(np.array_equal(m, m.conj().T))


def sample_wigner(n: int, entry_law: str, seed) -> np.ndarray:
    """Draw an ``n x n`` Wigner matrix.

    ``entry_law="rademacher"`` gives real entries ``+-1/sqrt(n)``; ``"gaussian"``
    gives the Gaussian Wigner matrix with ``Re, Im ~ N(0, 1/(2n))`` above the
    diagonal and ``N(0, 1/n)`` on it.
    """
    if int(n) < 1:
        raise ValueError("matrix order n must be at least 1")
    rng = _as_generator(seed)
    if entry_law == "rademacher":
        signs = rng.integers(0, 2, size=(n, n)) * 2.0 - 1.0
        return hermitian_from_upper(signs / math.sqrt(n))
    if entry_law == "gaussian":
        re = rng.standard_normal((n, n))
        im = rng.standard_normal((n, n))
        upper = (re + 1j * im) / math.sqrt(2.0 * n)
        diag = rng.standard_normal(n) / math.sqrt(n)
        upper[np.diag_indices(n)] = diag
        return hermitian_from_upper(upper)
    raise ValueError(f"unknown entry law {entry_law!r}")


def sample_gue(n: int, seed) -> np.ndarray:
    return sample_wigner(n, "gaussian", seed)


def sample_wishart(n: int, p: int, seed) -> np.ndarray:
    """Draw ``X^* X`` with ``X`` a ``p x n`` complex Gaussian matrix.

    ``Re X_ij, Im X_ij ~ N(0, 1/(2n))``.  The product is symmetrised from its
    upper triangle so the result is exactly Hermitian.
    """
    if int(n) < 1 or int(p) < 1:
        raise ValueError("wishart dimensions must be positive")
    rng = _as_generator(seed)
    x = (rng.standard_normal((p, n)) + 1j * rng.standard_normal((p, n))) / math.sqrt(2.0 * n)
    return hermitian_from_upper(x.conj().T @ x)


def write_matrix(path, m: np.ndarray) -> None:
    """Debug dump: 8-byte magic, u64 order, then row-major little-endian complex128."""
    m = np.asarray(m, dtype="<c16")
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    with open(path, "wb") as fh:
        fh.write(MATRIX_MAGIC + struct.pack("<Q", m.shape[0]))
        fh.write(np.ascontiguousarray(m).tobytes(order="C"))


def read_matrix(path) -> np.ndarray:
    with open(path, "rb") as fh:
        head = fh.read(16)
        if len(head) != 16 or head[:8] != MATRIX_MAGIC:
            raise ValueError(f"{path}: not a matrix dump")
        (n,) = struct.unpack("<Q", head[8:])
        data = np.frombuffer(fh.read(), dtype="<c16")
    if data.size != n * n:
        raise ValueError(f"{path}: expected {n * n} entries, found {data.size}")
    return data.reshape(n, n).astype(complex)
