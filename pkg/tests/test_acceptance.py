"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line (shown in the terminal summary and,
with ``-s``, inline) and then asserts. Tolerances are the stated ones; nothing
here is loosened to make a criterion pass.
"""

import itertools
import math

import numpy as np

from conftest import ACCEPTANCE_LINES
from qutrit_depol.channels import (
    ACTIVE_PARAMETERS,
    NoiseConfig,
    Topology,
    collective_kraus,
    depolarizing_kraus,
    evolve,
    lift,
)
from qutrit_depol.closedform import crosscheck
from qutrit_depol.criteria import classify, pt_spectrum
from qutrit_depol.numerics import hermiticity_deviation
from qutrit_depol.states import horodecki_state
from qutrit_depol.sweeps import (
    DEFAULT_ALPHAS,
    bound_window,
    find_crossing,
    global_spectrum_trace,
    sweep,
    uniform_grid,
    unitary_invariance_check,
)

GRID = uniform_grid(201)


def verdict(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2} {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def all_configs(values):
    for topo in Topology:
        names = ACTIVE_PARAMETERS[topo]
        for combo in itertools.product(values, repeat=len(names)):
            yield NoiseConfig(topo, **dict(zip(names, combo)))


def test_01_kraus_completeness():
    worst = 0.0
    for p in np.round(np.linspace(0, 1, 11), 10):
        single = depolarizing_kraus(p)
        for k in (single, lift(single, "A"), lift(single, "B"), collective_kraus(p)):
            worst = max(worst, k.completeness_deviation())
    verdict(1, "kraus completeness", worst <= 1e-13, f"max deviation {worst:.2e} (tol 1e-13)")


def test_02_channel_sanity():
    trace_dev = herm_dev = 0.0
    min_eig = math.inf
    for alpha in (4.1, 4.5, 5.0):
        rho0 = horodecki_state(alpha)
        for cfg in all_configs((0.0, 0.3, 8 / 9, 1.0)):
            rho = np.asarray(evolve(rho0, cfg))
            trace_dev = max(trace_dev, abs(np.trace(rho) - 1))
            herm_dev = max(herm_dev, hermiticity_deviation(rho))
            min_eig = min(min_eig, np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0])
    ok = trace_dev <= 1e-12 and herm_dev <= 1e-12 and min_eig >= -1e-10
    verdict(2, "channel sanity", ok,
            f"trace dev {trace_dev:.2e}, hermiticity dev {herm_dev:.2e}, min eigenvalue {min_eig:.3e}")


def test_03_closed_form_oracle():
    worst = 0.0
    for a, p1, p2 in itertools.product(np.linspace(2, 5, 5), np.linspace(0, 1, 5), np.linspace(0, 1, 5)):
        worst = max(
            worst,
            crosscheck(a, NoiseConfig(Topology.LOCAL_A, p1=p1)),
            crosscheck(a, NoiseConfig(Topology.MULTILOCAL, p1=p1, p2=p2)),
            crosscheck(a, NoiseConfig(Topology.COLLECTIVE, p=p2)),
        )
    numeric = pt_spectrum(horodecki_state(5))[0]
    wrong = (40 - math.sqrt((41 - 100 + 41 * 25) * 64)) / 336
    gap = abs(wrong - numeric)
    verdict(3, "closed-form oracle", worst <= 1e-10 and gap >= 0.1,
            f"max discrepancy {worst:.2e} (tol 1e-10); 41a^2 variant off by {gap:.3f} (need >= 0.1)")


def test_04_zero_noise_negativity():
    expected = (math.sqrt(41) - 5) / 14
    n5 = classify(horodecki_state(5)).negativity
    ppt = {a: classify(horodecki_state(a)).negativity for a in (2.5, 3.5, 4.0)}
    ok = abs(n5 - expected) <= 1e-10 and all(v == 0 for v in ppt.values())
    verdict(4, "zero-noise negativity", ok,
            f"N(alpha=5) = {n5:.12f} vs {expected:.12f}; N(2.5, 3.5, 4) = {list(ppt.values())}")


def test_05_local_a_alpha5():
    cross = find_crossing(Topology.LOCAL_A, 5.0, "p1")
    win = bound_window(Topology.LOCAL_A, 5.0, "p1")
    ok = (
        cross is not None
        and abs(cross.crossing_value - 0.20) <= 0.01
        and win is not None
        and abs(win.lower - 0.21) <= 0.01
        and abs(win.upper - 0.288) <= 0.01
    )
    verdict(5, "local-A alpha=5", ok,
            f"crossing p1 = {cross.crossing_value:.5f}; PPT with positive excess on "
            f"[{win.lower:.5f}, {win.upper:.5f}]")


def test_06_multilocal_p1_01_never_ppt():
    recs = sweep(Topology.MULTILOCAL, DEFAULT_ALPHAS, "p2", GRID, {"p1": 0.1})
    failing = {}
    for r in recs:
        if r.negativity <= 1e-10 and r.alpha not in failing:
            failing[r.alpha] = r.p2
    detail = "negativity positive everywhere" if not failing else "first p2 with zero negativity: " + ", ".join(
        f"alpha={a:g} at {p:.3f}" for a, p in failing.items()
    )
    verdict(6, "multilocal p1=0.1 stays NPT", not failing, detail)


def test_07_multilocal_p1_005_alpha5():
    cross = find_crossing(Topology.MULTILOCAL, 5.0, "p2", {"p1": 0.05})
    win = bound_window(Topology.MULTILOCAL, 5.0, "p2", {"p1": 0.05})
    ok_cross = cross is not None and abs(cross.crossing_value - 0.165) <= 0.005
    ok_lower = win is not None and abs(win.lower - 0.165) <= 0.01
    ok_upper = win is not None and abs(win.upper - 1.0) <= 0.01
    verdict(7, "multilocal p1=0.05 alpha=5", ok_cross and ok_lower and ok_upper,
            f"crossing p2 = {cross.crossing_value:.5f}; window [{win.lower:.5f}, {win.upper:.5f}] "
            f"(need left 0.165 +- 0.01 and right 1.0)")


def test_08_collective_minimum_then_rise():
    interior = (GRID > 0) & (GRID < 8 / 9)
    problems = []
    for alpha in DEFAULT_ALPHAS:
        neg = np.array([r.negativity for r in sweep(Topology.COLLECTIVE, [alpha], "p", GRID)])
        zero_at = GRID[neg <= 1e-10]
        signs = np.sign(np.diff(neg[interior]))
        signs = signs[signs != 0]
        changes = int(np.count_nonzero(signs[1:] != signs[:-1]))
        if zero_at.size or changes != 1:
            first = f"{zero_at[0]:.3f}" if zero_at.size else "never"
            problems.append(f"alpha={alpha:g}: zero from p={first}, slope sign changes {changes}")
    verdict(8, "collective minimum then rise", not problems,
            "all curves positive with one interior minimum" if not problems else "; ".join(problems))


def test_09_global_fig5():
    eigs = global_spectrum_trace(4.3, 0.5, 0.5, GRID)
    excess = np.array([r.realignment_excess for r in sweep(Topology.GLOBAL, [4.3], "p", GRID, {"p1": 0.5, "p2": 0.5})])
    ok = eigs.min() >= -1e-10 and np.all(excess < 0)
    verdict(9, "global p1=p2=0.5 alpha=4.3", ok,
            f"min PT eigenvalue {eigs.min():.4f}; max realignment excess {excess.max():.4f}")


def test_10_unitary_invariance():
    worst = 0.0
    for alpha, v in itertools.product((4.3, 5.0), (0.3, 0.5)):
        for topo in Topology:
            cfg = NoiseConfig(topo, **{name: v for name in ACTIVE_PARAMETERS[topo]})
            worst = max(worst, unitary_invariance_check(alpha, cfg))
    verdict(10, "unitary invariance", worst <= 1e-10, f"max spectral gap {worst:.2e} (tol 1e-10)")


def test_11_equivalence_identities():
    worst = 0.0
    for alpha, p in itertools.product((2.0, 3.5, 4.3, 5.0), np.linspace(0, 1, 11)):
        rho0 = horodecki_state(alpha)
        coll = np.asarray(evolve(rho0, NoiseConfig(Topology.COLLECTIVE, p=p)))
        multi = np.asarray(evolve(rho0, NoiseConfig(Topology.MULTILOCAL, p1=p, p2=p)))
        multi_a = np.asarray(evolve(rho0, NoiseConfig(Topology.MULTILOCAL, p1=p, p2=0.0)))
        local_a = np.asarray(evolve(rho0, NoiseConfig(Topology.LOCAL_A, p1=p)))
        worst = max(worst, np.max(np.abs(coll - multi)), np.max(np.abs(multi_a - local_a)))
    verdict(11, "equivalence identities", worst <= 1e-12, f"max entry difference {worst:.2e} (tol 1e-12)")
