"""Closed-form partial-transpose spectra of the noisy Horodecki family.

With local depolarizing strengths ``p1`` (qutrit A) and ``p2`` (qutrit B) the
partial transpose of the evolved state has three triply degenerate
eigenvalues::

    lambda_135, lambda_246 = (320 - 24 p2 + 3 p1 (9 p2 - 8)
                              +/- sqrt(G) |9 p1 - 8| |9 p2 - 8|) / 2688
    lambda_789 = (128 + 24 p1 + 24 p2 - 27 p1 p2) / 1344

    G = 4 alpha^2 - 20 alpha + 41 = (2 alpha - 5)^2 + 16

At zero noise these reduce to ``(5 +/- sqrt(G)) / 42`` and ``2 / 21``, which
follows from block-diagonalising the partial transpose of the initial state
into three 2x2 blocks ``[[alpha, 2], [2, 5 - alpha]] / 21`` plus three
``2 / 21`` diagonal entries. A variant with ``41 alpha^2`` in the radical is
also in circulation; it is wrong (at ``alpha = 5`` it gives about -0.62 for
the negative branch instead of -0.0334) and is not used.

Local noise on either side and collective noise all keep the state inside
the family ``s rho0 + (1 - s) I / 9`` with
``s = (1 - 9 p1 / 8)(1 - 9 p2 / 8)``; collective noise at strength ``p`` is
the ``p1 = p2 = p`` case. Global noise has no closed form here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import NoiseConfig, Topology, check_probability, evolve
from .criteria import pt_spectrum
from .errors import UnsupportedTopology
from .states import check_alpha, horodecki_state


@dataclass(frozen=True)
class PtSpectrum:
    lambda_135: float
    lambda_246: float
    lambda_789: float

    def eigenvalues(self) -> np.ndarray:
        """All nine eigenvalues, ascending."""
        return np.sort(np.repeat([self.lambda_135, self.lambda_246, self.lambda_789], 3))

    def trace(self) -> float:
        return 3 * (self.lambda_135 + self.lambda_246 + self.lambda_789)

    @property
    def negative_branch(self) -> float:
        return self.lambda_246


def discriminant(alpha: float) -> float:
    return 4 * alpha**2 - 20 * alpha + 41


def pt_spectrum_multilocal(alpha: float, p1: float, p2: float) -> PtSpectrum:
    alpha = check_alpha(alpha)
    p1, p2 = check_probability(p1, "p1"), check_probability(p2, "p2")
    prefix = 320 - 24 * p2 + 3 * p1 * (-8 + 9 * p2)
    radical = math.sqrt(discriminant(alpha)) * abs(9 * p1 - 8) * abs(9 * p2 - 8)
    return PtSpectrum(
        lambda_135=(prefix + radical) / 2688,
        lambda_246=(prefix - radical) / 2688,
        lambda_789=(128 + 24 * p1 + 24 * p2 - 27 * p1 * p2) / 1344,
    )


def pt_spectrum_local_a(alpha: float, p1: float) -> PtSpectrum:
    return pt_spectrum_multilocal(alpha, p1, 0.0)


def pt_spectrum_local_b(alpha: float, p2: float) -> PtSpectrum:
    return pt_spectrum_multilocal(alpha, 0.0, p2)


def pt_spectrum_collective(alpha: float, p: float) -> PtSpectrum:
    return pt_spectrum_multilocal(alpha, p, p)


def pt_spectrum_for(alpha: float, cfg: NoiseConfig) -> PtSpectrum:
    """Closed-form spectrum for any topology that has one."""
    topo = cfg.topology
    if topo is Topology.LOCAL_A:
        return pt_spectrum_local_a(alpha, cfg.p1)
    if topo is Topology.LOCAL_B:
        return pt_spectrum_local_b(alpha, cfg.p2)
    if topo is Topology.MULTILOCAL:
        return pt_spectrum_multilocal(alpha, cfg.p1, cfg.p2)
    if topo is Topology.COLLECTIVE:
        return pt_spectrum_collective(alpha, cfg.p)
    raise UnsupportedTopology(f"no closed-form spectrum for {topo.value} noise")


def closed_form_negativity(alpha: float, cfg: NoiseConfig) -> float:
    lam = pt_spectrum_for(alpha, cfg).lambda_246
    return 3 * -lam if lam < 0 else 0.0


def absolute_negative_branch(alpha: float, cfg: NoiseConfig) -> float:
    """``3 |lambda_246|`` with no clipping at zero.

    Unlike the negativity this keeps growing after the branch turns positive,
    so curves of it show a V-shaped minimum where the state becomes PPT.
    """
    return 3 * abs(pt_spectrum_for(alpha, cfg).lambda_246)


def crosscheck(alpha: float, cfg: NoiseConfig) -> float:
    """Max ``|numeric - closed form|`` over the sorted nine PT eigenvalues."""
    expected = pt_spectrum_for(alpha, cfg).eigenvalues()
    numeric = pt_spectrum(evolve(horodecki_state(alpha), cfg))
    return float(np.max(np.abs(numeric - expected)))
