"""Self-checks run by ``qutrit-depol validate``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .channels import (
    NoiseConfig,
    Topology,
    collective_kraus,
    depolarizing_kraus,
    evolve,
    lift,
)
from .closedform import crosscheck
from .numerics import max_abs
from .states import horodecki_state
from .sweeps import unitary_invariance_check


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.value <= self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name} {status} {self.value:.3e}"


def kraus_completeness() -> CheckResult:
    worst = 0.0
    for p in np.round(np.linspace(0, 1, 11), 10):
        single = depolarizing_kraus(p)
        for k in (single, lift(single, "A"), lift(single, "B"), collective_kraus(p)):
            worst = max(worst, k.completeness_deviation())
    return CheckResult("kraus_completeness", worst, 1e-13)


def closed_form_grid(n: int = 5) -> CheckResult:
    worst = 0.0
    alphas = np.linspace(4.0, 5.0, n)
    ps = np.linspace(0.0, 1.0, n)
    for a, p1, p2 in itertools.product(alphas, ps, ps):
        worst = max(
            worst,
            crosscheck(a, NoiseConfig(Topology.LOCAL_A, p1=p1)),
            crosscheck(a, NoiseConfig(Topology.MULTILOCAL, p1=p1, p2=p2)),
            crosscheck(a, NoiseConfig(Topology.COLLECTIVE, p=p2)),
        )
    return CheckResult("closed_form_crosscheck", worst, 1e-10)


def representative_configs(value: float) -> list[NoiseConfig]:
    """One config per topology with every active parameter set to ``value``."""
    return [
        NoiseConfig(Topology.LOCAL_A, p1=value),
        NoiseConfig(Topology.LOCAL_B, p2=value),
        NoiseConfig(Topology.MULTILOCAL, p1=value, p2=value),
        NoiseConfig(Topology.COLLECTIVE, p=value),
        NoiseConfig(Topology.GLOBAL, p1=value, p2=value, p=value),
    ]


def unitary_invariance() -> CheckResult:
    worst = 0.0
    for a, v in itertools.product((4.3, 5.0), (0.3, 0.5)):
        for cfg in representative_configs(v):
            worst = max(worst, unitary_invariance_check(a, cfg))
    return CheckResult("unitary_invariance", worst, 1e-10)


def equivalence_identities() -> CheckResult:
    worst = 0.0
    for a, v in itertools.product((4.1, 4.5, 5.0), (0.0, 0.3, 8 / 9, 1.0)):
        rho0 = horodecki_state(a)
        coll = evolve(rho0, NoiseConfig(Topology.COLLECTIVE, p=v)).matrix
        multi = evolve(rho0, NoiseConfig(Topology.MULTILOCAL, p1=v, p2=v)).matrix
        local = evolve(rho0, NoiseConfig(Topology.LOCAL_A, p1=v)).matrix
        multi_a = evolve(rho0, NoiseConfig(Topology.MULTILOCAL, p1=v)).matrix
        worst = max(worst, max_abs(coll - multi), max_abs(local - multi_a))
    return CheckResult("equivalence_identities", worst, 1e-12)


def run_all() -> list[CheckResult]:
    return [kraus_completeness(), closed_form_grid(), unitary_invariance(), equivalence_identities()]
