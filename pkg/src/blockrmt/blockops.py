"""Kronecker algebra for block matrices ``I_k (x) A + W (x) B``.

Besides assembly this module carries the finite-dimensional moment identity
behind the limit theorem: expanding ``(I (x) A + W (x) B)^m`` and taking the
normalised trace gives

    tr_nk(B^m) = sum_j tr_k(W^j) tr_n(phi(A, B; m - j, j)),

where ``phi`` sums all words with ``m - j`` letters ``A`` and ``j`` letters
``B``.  Word sums are enumerated by bitmask in a fixed order so results are
bit-stable.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .measures import DiscreteMeasure

MAX_WORD_LENGTH = 12


def ntrace(m: np.ndarray) -> complex:
    """Normalised trace ``(1/n) sum_i m_ii``."""
    m = np.asarray(m)
    return np.trace(m) / m.shape[0]


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Block matrix whose ``(i, j)`` block is ``a_ij * b``."""
    a = np.asarray(a)
    b = np.asarray(b)
    ra, ca = a.shape
    rb, cb = b.shape
    out = a[:, None, :, None] * b[None, :, None, :]
    return out.reshape(ra * rb, ca * cb)


@dataclass(frozen=True, eq=False)
class BlockMatrixSpec:
    """``k`` x ``k`` block matrix with ``n`` x ``n`` blocks ``A``, ``B`` and coupling ``W``."""

    w: np.ndarray
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        for name in ("w", "a", "b"):
            m = np.asarray(getattr(self, name))
            if m.ndim != 2 or m.shape[0] != m.shape[1]:
                raise ValueError(f"{name} must be a square matrix, got shape {m.shape}")
            object.__setattr__(self, name, m)
        if self.a.shape != self.b.shape:
            raise ValueError(f"A and B must share an order, got {self.a.shape} and {self.b.shape}")

    @property
    def k(self) -> int:
        return self.w.shape[0]

    @property
    def n(self) -> int:
        return self.a.shape[0]


def assemble(spec: BlockMatrixSpec) -> np.ndarray:
    """Return ``I_k (x) A + W (x) B`` (order ``n k``)."""
    k, n = spec.k, spec.n
    w = spec.w.astype(complex)
    out = kron(w, spec.b.astype(complex))
    for i in range(k):
        out[i * n:(i + 1) * n, i * n:(i + 1) * n] += spec.a
    # restore exact conjugate symmetry lost to independent rounding of mirrored blocks
    upper = np.triu(out, 1)
    herm = upper + upper.conj().T
    herm[np.diag_indices_from(herm)] = out.diagonal().real
    return herm


def phi_expansion(a: np.ndarray, b: np.ndarray, a_count: int, b_count: int) -> np.ndarray:
    """Sum of all words with ``a_count`` factors ``a`` and ``b_count`` factors ``b``."""
    if a_count < 0 or b_count < 0:
        raise ValueError("letter counts must be nonnegative")
    m = a_count + b_count
    if m > MAX_WORD_LENGTH:
        raise ValueError(f"word length {m} exceeds the guard {MAX_WORD_LENGTH}")
    a = np.asarray(a)
    b = np.asarray(b)
    dtype = np.result_type(a, b)
    n = a.shape[0]
    total = np.zeros((n, n), dtype=dtype)
    if m == 0:
        return np.eye(n, dtype=dtype)
    for mask in range(1 << m):
        if mask.bit_count() != b_count:
            continue
        word = np.eye(n, dtype=dtype)
        for pos in range(m):
            word = word @ (b if mask >> pos & 1 else a)
        total += word
    return total


def trace_moment_decomposition(spec: BlockMatrixSpec, m: int) -> tuple[float, float]:
    """Both sides of the trace identity for the ``m``-th moment.

    ``lhs`` is the normalised trace of the assembled matrix power, ``rhs`` the
    sum over ``j`` of ``tr_k(W^j) tr_n(phi(A, B; m - j, j))``.
    """
    if m < 0 or m > 10:
        raise ValueError("moment order must lie in 0..10")
    if spec.n * spec.k > 256:
        raise ValueError("exact check limited to n k <= 256")
    big = assemble(spec)
    lhs = ntrace(np.linalg.matrix_power(big, m))
    rhs = 0.0
    for j in range(m + 1):
        rhs += ntrace(np.linalg.matrix_power(spec.w, j)) * ntrace(phi_expansion(spec.a, spec.b, m - j, j))
    return float(np.real(lhs)), float(np.real(rhs))


def mixture_trace(spec: BlockMatrixSpec, m: int) -> float:
    """``int tr_n((A + t B)^m) mu_W(dt)`` as an exact sum over the eigenvalues of ``W``."""
    eig = np.linalg.eigvalsh(spec.w)
    total = 0.0
    for t in eig:
        total += np.real(ntrace(np.linalg.matrix_power(spec.a + t * spec.b, m)))
    return float(total / eig.size)


def complete_graph_w(k: int) -> tuple[np.ndarray, DiscreteMeasure]:
    """Coupling for the block matrix with ``A`` on the diagonal and ``B`` elsewhere.

    Returns the ``k x k`` matrix with zero diagonal and unit off-diagonal
    entries and its spectral measure ``(k-1)/k delta_{-1} + 1/k delta_{k-1}``.
    """
    if int(k) < 1:
        raise ValueError("k must be at least 1")
    w = np.ones((k, k)) - np.eye(k)
    if k == 1:
        return w, DiscreteMeasure.point(0.0)
    return w, DiscreteMeasure(np.array([-1.0, k - 1.0]), np.array([(k - 1) / k, 1.0 / k]))
