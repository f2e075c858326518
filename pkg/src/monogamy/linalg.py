"""Dense complex linear algebra for small (<= 64x64) matrices.

All operations are pure functions on numpy arrays.  Index convention:
subsystem 0 is the leftmost tensor factor, composite indices are row-major.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

# Max-abs asymmetry allowed before a matrix is rejected as non-Hermitian.
HERMITICITY_ATOL = 1e-10
# Eigenvalues of nominally PSD matrices in [PSD_EIG_FLOOR, 0) are clipped
# to zero; anything more negative is a hard error.
PSD_EIG_FLOOR = -1e-10


def _as_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def _check_square(m: np.ndarray) -> int:
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m.shape[0]


def _check_dims(m: np.ndarray, dims: Sequence[int]) -> tuple[int, ...]:
    d = _check_square(m)
    dims = tuple(int(x) for x in dims)
    if any(x < 1 for x in dims):
        raise ValueError(f"subsystem dimensions must be positive, got {dims}")
    if int(np.prod(dims)) != d:
        raise ValueError(f"product of dims {dims} does not match matrix side {d}")
    return dims


def kron(a, b) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def partial_trace(rho, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out all subsystems not listed in ``keep``.

    Parameters
    ----------
    rho : array_like
        Square matrix over the tensor product of ``dims``.
    dims : sequence of int
        Subsystem dimensions, leftmost factor first.
    keep : sequence of int
        Indices of the subsystems to retain (order-insensitive; the result
        is ordered by ascending subsystem index).
    """
    rho = _as_matrix(rho)
    dims = _check_dims(rho, dims)
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in keep):
        raise ValueError(f"keep indices {keep} out of range for {n} subsystems")
    if not keep:
        raise ValueError("must keep at least one subsystem")

    t = rho.reshape(dims + dims)
    row = list(range(n))
    col = [i + n if i in keep else i for i in range(n)]
    out = [i for i in keep] + [i + n for i in keep]
    reduced = np.einsum(t, row + col, out)
    dk = int(np.prod([dims[i] for i in keep]))
    return reduced.reshape(dk, dk)


def partial_transpose(rho, dims: Sequence[int], part: int) -> np.ndarray:
    """Transpose applied to a single tensor factor."""
    rho = _as_matrix(rho)
    dims = _check_dims(rho, dims)
    n = len(dims)
    part = int(part)
    if part < 0 or part >= n:
        raise ValueError(f"part index {part} out of range for {n} subsystems")
    t = rho.reshape(dims + dims)
    axes = list(range(2 * n))
    axes[part], axes[part + n] = axes[part + n], axes[part]
    d = rho.shape[0]
    return t.transpose(axes).reshape(d, d)


def hermitian_eigen(m, atol: float = HERMITICITY_ATOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues real and sorted
    in descending order and eigenvectors as the corresponding columns.
    """
    m = _as_matrix(m)
    _check_square(m)
    asym = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if asym > atol:
        raise ValueError(f"matrix is not Hermitian (max asymmetry {asym:.3e})")
    w, v = np.linalg.eigh(m)
    return w[::-1].copy(), v[:, ::-1].copy()


def trace_norm(m) -> float:
    """Sum of singular values.

    For Hermitian input this is the sum of absolute eigenvalues; otherwise
    the singular values are obtained from the spectrum of ``m† m``.
    """
    m = _as_matrix(m)
    _check_square(m)
    if np.max(np.abs(m - m.conj().T), initial=0.0) <= HERMITICITY_ATOL:
        return float(np.sum(np.abs(np.linalg.eigvalsh(m))))
    gram = m.conj().T @ m
    s2 = np.clip(np.linalg.eigvalsh(gram), 0.0, None)
    return float(np.sum(np.sqrt(s2)))


def psd_sqrt(m, atol: float = HERMITICITY_ATOL) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in ``[PSD_EIG_FLOOR, 0)`` are treated as round-off and
    clipped to zero; more negative eigenvalues raise ``ValueError``.
    """
    w, v = hermitian_eigen(m, atol=atol)
    if w.size and w[-1] < PSD_EIG_FLOOR:
        raise ValueError(f"matrix is not PSD (min eigenvalue {w[-1]:.3e})")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T
