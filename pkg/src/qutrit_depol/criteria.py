"""Partial transpose, negativity, realignment, and the three-way entanglement verdict.

Index conventions, with ``|m mu>`` the row basis and ``|n nu>`` the column
basis of a two-qutrit matrix (Latin letters for qutrit A):

* partial transpose on B:  ``PT[(m, mu), (n, nu)] = rho[(m, nu), (n, mu)]``
* realignment:             ``R[(m, n), (nu, mu)]  = rho[(m, nu), (n, mu)]``

Row ``(m, n)`` of ``R`` is the row-major flattening of the 3x3 block
``rho[(m, .), (n, .)]``. Flattening blocks column-major instead permutes the
columns of ``R`` and leaves its singular values unchanged.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .numerics import hermitian_eigenvalues, trace_norm
from .states import D, as_density_array

NEGATIVE_EIGENVALUE_TOL = 1e-10
DETECTION_THRESHOLD = 1e-10


def _as_tensor(rho) -> np.ndarray:
    # axes: (row A, row B, col A, col B)
    return as_density_array(rho).reshape(D, D, D, D)


def partial_transpose(rho, subsystem: str = "B") -> np.ndarray:
    """Transpose the indices of one qutrit only."""
    t = _as_tensor(rho)
    sub = subsystem.upper()
    if sub == "B":
        out = t.transpose(0, 3, 2, 1)
    elif sub == "A":
        out = t.transpose(2, 1, 0, 3)
    else:
        raise DimensionMismatch(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return out.reshape(D * D, D * D)


def pt_spectrum(rho, subsystem: str = "B", method: str = "lapack") -> np.ndarray:
    """Ascending eigenvalues of the partial transpose."""
    return hermitian_eigenvalues(partial_transpose(rho, subsystem), method=method)


def negativity_from_spectrum(eigs, tol: float = NEGATIVE_EIGENVALUE_TOL) -> float:
    eigs = np.asarray(eigs, dtype=float)
    neg = eigs[eigs < -tol]
    return float(-neg.sum()) if neg.size else 0.0


def negativity(rho) -> float:
    """Sum of ``|lambda|`` over eigenvalues of ``rho^{T_B}`` below ``-1e-10``.

    For the Horodecki family under depolarizing noise the negative eigenvalues
    come as a degenerate triple, so this is ``3 |lambda_2|`` while NPT and 0
    once the state is PPT.
    """
    return negativity_from_spectrum(pt_spectrum(rho))


def realign(rho) -> np.ndarray:
    t = _as_tensor(rho)
    # t axes are (m, nu, n, mu); R wants rows (m, n) and columns (nu, mu)
    return t.transpose(0, 2, 1, 3).reshape(D * D, D * D)


def realignment_norm(rho) -> float:
    return trace_norm(realign(rho))


def realignment_excess(rho) -> float:
    """``||rho^R||_1 - 1``. Positive values certify entanglement."""
    return realignment_norm(rho) - 1.0


class Label(str, enum.Enum):
    NPT_FREE_ENTANGLED = "NptFreeEntangled"
    PPT_BOUND_ENTANGLED = "PptBoundEntangledByRealignment"
    # neither test fired; says nothing about separability
    UNDETECTED = "Undetected"


@dataclass(frozen=True)
class Classification:
    label: Label
    negativity: float
    realignment_excess: float
    min_pt_eigenvalue: float


def label_for(neg: float, excess: float, threshold: float = DETECTION_THRESHOLD) -> Label:
    if neg > threshold:
        return Label.NPT_FREE_ENTANGLED
    if excess > threshold:
        return Label.PPT_BOUND_ENTANGLED
    return Label.UNDETECTED


def classify(rho) -> Classification:
    """Run both criteria on a two-qutrit state.

    >>> from qutrit_depol.states import horodecki_state
    >>> classify(horodecki_state(5)).label.value
    'NptFreeEntangled'
    """
    eigs = pt_spectrum(rho)
    neg = negativity_from_spectrum(eigs)
    excess = realignment_excess(rho)
    return Classification(label_for(neg, excess), neg, excess, float(eigs[0]))
