"""Dense complex matrix helpers for the 3x3 and 9x9 algebra used throughout.

Matrices are plain ``numpy`` arrays of dtype ``complex128`` stored row-major.
Two eigenvalue routes are provided: LAPACK (``numpy.linalg.eigvalsh``) as the
default workhorse, and a cyclic complex Jacobi solver that shares no code with
it and is used to cross-validate.
"""

from __future__ import annotations

import numpy as np

from .errors import NotHermitian, NotSquare

HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
# eigenvalues of m^dagger m down to this are clamped to 0 before the square root
GRAM_CLAMP = -1e-12


def as_matrix(m) -> np.ndarray:
    """Return ``m`` as a 2-D complex array, rejecting NaN/Inf entries."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def adjoint(m) -> np.ndarray:
    return as_matrix(m).conj().T


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product ``a (x) b``.

    Entry ``(i*b.rows + k, j*b.cols + l)`` of the result is ``a[i, j] * b[k, l]``,
    so the first factor indexes the slow (outer) block.
    """
    return np.kron(as_matrix(a), as_matrix(b))


def max_abs(m) -> float:
    """Max-entry norm."""
    m = np.asarray(m)
    return float(np.max(np.abs(m))) if m.size else 0.0


def hermiticity_deviation(m) -> float:
    m = as_matrix(m)
    return max_abs(m - m.conj().T)


def _checked_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise NotSquare(f"matrix of shape {m.shape} is not square")
    dev = hermiticity_deviation(m)
    if dev > tol:
        raise NotHermitian(f"max |m - m^dagger| = {dev:.3e} exceeds {tol:.0e}")
    return (m + m.conj().T) / 2


def jacobi_eigh(m, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot ``a[p, q]`` with a
    diagonal unitary, then applies the real symmetric Jacobi rotation that
    annihilates it. Sweeps stop once the off-diagonal Frobenius norm falls
    below ``tol`` times ``max(1, ||m||_F)``.

    Args:
        m: Hermitian square matrix (symmetrised internally).
        tol: convergence threshold on the off-diagonal Frobenius norm.
        max_sweeps: hard limit on the number of full sweeps.

    Returns:
        ``(w, v)`` with eigenvalues ``w`` ascending and unitary ``v`` whose
        columns are the matching eigenvectors, ``m = v @ diag(w) @ v^dagger``.
    """
    a = _checked_hermitian(m).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    off_mask = ~np.eye(n, dtype=bool)

    for _ in range(max_sweeps):
        off = np.linalg.norm(a[off_mask])
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = apq / r
                theta = 0.5 * np.arctan2(2.0 * r, a[q, q].real - a[p, p].real)
                c, s = np.cos(theta), np.sin(theta)
                g = np.array([[c, s], [-np.conj(phase) * s, np.conj(phase) * c]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = g.conj().T @ a[idx, :]
                v[:, idx] = v[:, idx] @ g
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

    w = np.diag(a).real
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigenvalues(m, method: str = "lapack") -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix in ascending order.

    ``m`` must be square with ``max|m - m^dagger| <= 1e-10``; it is replaced by
    its Hermitian part before solving. ``method`` is ``"lapack"`` or ``"jacobi"``.
    """
    h = _checked_hermitian(m)
    if method == "lapack":
        return np.linalg.eigvalsh(h)
    if method == "jacobi":
        return jacobi_eigh(h)[0]
    raise ValueError(f"unknown eigenvalue method {method!r}")


def singular_values(m, method: str = "svd") -> np.ndarray:
    """Singular values in descending order, ``min(rows, cols)`` of them.

    ``method="svd"`` uses LAPACK's SVD. ``method="gram"`` takes square roots of
    the eigenvalues of ``m^dagger m`` (clamping roundoff negatives to zero);
    it loses accuracy on tiny singular values, around ``sqrt(eps)``.
    """
    m = as_matrix(m)
    k = min(m.shape)
    if method == "svd":
        return np.linalg.svd(m, compute_uv=False)[:k]
    if method == "gram":
        small = m.conj().T @ m if m.shape[0] >= m.shape[1] else m @ m.conj().T
        ev = hermitian_eigenvalues(small)
        if ev.size and ev.min() < GRAM_CLAMP * max(1.0, ev.max()):
            raise ArithmeticError("Gram matrix has a significantly negative eigenvalue")
        return np.sqrt(np.clip(ev, 0.0, None))[::-1][:k]
    raise ValueError(f"unknown singular value method {method!r}")


def trace_norm(m, method: str = "svd") -> float:
    """Sum of singular values."""
    return float(np.sum(singular_values(m, method=method)))
