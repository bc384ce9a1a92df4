"""Bipartite qutrit states: the one-parameter Horodecki family and its rotated twin.

Basis ordering is |00>, |01>, |02>, |10>, ..., |22>; the index of |ij> is
``3*i + j`` with ``i`` labelling qutrit A.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AlphaOutOfRange, DimensionMismatch
from .numerics import as_matrix, hermiticity_deviation, max_abs, tensor_product

D = 3
TRACE_TOL = 1e-12
HERMITIAN_TOL = 1e-12
PSD_TOL = -1e-10
ALPHA_MIN, ALPHA_MAX = 2.0, 5.0

# (i, j) pairs spanning sigma_+ and sigma_-
SIGMA_PLUS_SUPPORT = ((0, 1), (1, 2), (2, 0))
SIGMA_MINUS_SUPPORT = ((1, 0), (2, 1), (0, 2))


@dataclass(frozen=True)
class DensityMatrix:
    """A validated density matrix with its subsystem dimensions.

    Construction checks unit trace, Hermiticity and positivity at the package
    tolerances; pass ``check=False`` to skip (e.g. for intermediate sums).
    """

    matrix: np.ndarray
    dims: tuple[int, ...] = (D, D)
    check: bool = True

    def __post_init__(self):
        m = as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        n = int(np.prod(self.dims))
        if m.shape != (n, n):
            raise DimensionMismatch(f"matrix shape {m.shape} does not match dims {self.dims}")
        if self.check:
            self.validate()

    def validate(self) -> None:
        m = self.matrix
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace {tr} differs from 1")
        dev = hermiticity_deviation(m)
        if dev > HERMITIAN_TOL:
            raise ValueError(f"not Hermitian (deviation {dev:.3e})")
        lo = np.linalg.eigvalsh((m + m.conj().T) / 2)[0]
        if lo < PSD_TOL:
            raise ValueError(f"not positive semidefinite (min eigenvalue {lo:.3e})")

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)

    @property
    def shape(self):
        return self.matrix.shape

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)

    def allclose(self, other, atol: float = 1e-12) -> bool:
        return max_abs(self.matrix - np.asarray(other)) <= atol


def as_density_array(rho) -> np.ndarray:
    """Accept a :class:`DensityMatrix` or a raw array; return the 9x9 array."""
    m = as_matrix(rho.matrix if isinstance(rho, DensityMatrix) else rho)
    if m.shape != (D * D, D * D):
        raise DimensionMismatch(f"expected a 9x9 two-qutrit matrix, got {m.shape}")
    return m


def ket(i: int, j: int) -> np.ndarray:
    """Computational basis vector |ij>."""
    v = np.zeros(D * D, dtype=complex)
    v[D * i + j] = 1.0
    return v


def projector(v: np.ndarray) -> np.ndarray:
    return np.outer(v, v.conj())


def psi_plus_vector() -> np.ndarray:
    return (ket(0, 0) + ket(1, 1) + ket(2, 2)) / np.sqrt(3)


def psi_plus() -> DensityMatrix:
    """Projector onto the maximally entangled state (|00> + |11> + |22>)/sqrt(3)."""
    return DensityMatrix(projector(psi_plus_vector()))


def _mixture(support) -> np.ndarray:
    return sum(projector(ket(i, j)) for i, j in support) / 3


def sigma_plus() -> DensityMatrix:
    return DensityMatrix(_mixture(SIGMA_PLUS_SUPPORT))


def sigma_minus() -> DensityMatrix:
    return DensityMatrix(_mixture(SIGMA_MINUS_SUPPORT))


def maximally_mixed() -> DensityMatrix:
    return DensityMatrix(np.eye(D * D, dtype=complex) / (D * D))


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not ALPHA_MIN <= alpha <= ALPHA_MAX:
        raise AlphaOutOfRange(f"alpha={alpha} outside [{ALPHA_MIN}, {ALPHA_MAX}]")
    return alpha


def horodecki_state(alpha: float) -> DensityMatrix:
    """Mixture ``2/7 |psi+><psi+| + alpha/7 sigma_+ + (5 - alpha)/7 sigma_-``.

    Separable for ``2 <= alpha <= 3``, PPT entangled for ``3 < alpha <= 4`` and
    NPT (distillable) for ``4 < alpha <= 5``.
    """
    alpha = check_alpha(alpha)
    m = (
        2 / 7 * projector(psi_plus_vector())
        + alpha / 7 * _mixture(SIGMA_PLUS_SUPPORT)
        + (5 - alpha) / 7 * _mixture(SIGMA_MINUS_SUPPORT)
    )
    return DensityMatrix(m)


def theta_unitary() -> np.ndarray:
    """Single-qutrit swap ``|0><1| + |1><0| + |2><2|``."""
    return np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=complex)


def local_theta() -> np.ndarray:
    """``I_3 (x) theta``: the swap acting on qutrit B only."""
    return tensor_product(np.eye(D), theta_unitary())


def apply_local_unitary(rho) -> DensityMatrix:
    """Conjugate a two-qutrit state by ``I_3 (x) theta``."""
    m = as_density_array(rho)
    u = local_theta()
    return DensityMatrix(u @ m @ u.conj().T)


def rotated_horodecki_state(alpha: float) -> DensityMatrix:
    """The family built directly from the rotated constituents.

    (I (x) theta)|psi+> = (|01> + |10> + |22>)/sqrt(3); the separable parts move to
    {|00>, |12>, |21>} and {|11>, |20>, |02>}. Equal to
    ``apply_local_unitary(horodecki_state(alpha))`` entrywise.
    """
    alpha = check_alpha(alpha)
    psi = (ket(0, 1) + ket(1, 0) + ket(2, 2)) / np.sqrt(3)
    m = (
        2 / 7 * projector(psi)
        + alpha / 7 * _mixture(((0, 0), (1, 2), (2, 1)))
        + (5 - alpha) / 7 * _mixture(((1, 1), (2, 0), (0, 2)))
    )
    return DensityMatrix(m)
