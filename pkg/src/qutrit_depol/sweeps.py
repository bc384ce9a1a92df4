"""Parameter sweeps over the noise strength, crossing and window detection.

All experiments start from :func:`~qutrit_depol.states.horodecki_state`.
Records come back ordered by ``(alpha, grid point)`` and are deterministic
for fixed inputs.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .channels import ACTIVE_PARAMETERS, NoiseConfig, Topology, evolve
from .criteria import Label, classify, pt_spectrum
from .errors import InvalidAxis
from .states import apply_local_unitary, horodecki_state

DEFAULT_ALPHAS = (4.2, 4.4, 4.6, 4.8, 5.0)
DEFAULT_GRID_POINTS = 201
FULLY_DEPOLARIZED = 8 / 9
CROSSING_XTOL = 1e-9
WINDOW_XTOL = 1e-6


@dataclass(frozen=True)
class SweepRecord:
    alpha: float
    p1: float
    p2: float
    p: float
    topology: str
    negativity: float
    realignment_excess: float
    min_pt_eigenvalue: float
    label: str

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CrossingResult:
    """Bracket ``[lower, upper]`` where the state goes from NPT to PPT."""

    parameter_name: str
    crossing_value: float
    bracket_width: float
    lower: float
    upper: float


@dataclass(frozen=True)
class BoundWindow:
    parameter_name: str
    lower: float
    upper: float

    @property
    def width(self) -> float:
        return self.upper - self.lower


def uniform_grid(n: int = DEFAULT_GRID_POINTS) -> np.ndarray:
    if n < 2:
        raise ValueError("grid needs at least two points")
    return np.linspace(0.0, 1.0, n)


def _config(topology, axis: str, value: float, fixed: Mapping[str, float] | None) -> NoiseConfig:
    topo = Topology.parse(topology)
    if axis not in ACTIVE_PARAMETERS[topo]:
        raise InvalidAxis(f"{topo.value} noise has no parameter {axis!r}")
    params = dict(fixed or {})
    params[axis] = float(value)
    return NoiseConfig(topo, **params)


def record_at(alpha: float, cfg: NoiseConfig) -> SweepRecord:
    c = classify(evolve(horodecki_state(alpha), cfg))
    return SweepRecord(
        alpha=float(alpha),
        p1=cfg.p1,
        p2=cfg.p2,
        p=cfg.p,
        topology=cfg.topology.value,
        negativity=c.negativity,
        realignment_excess=c.realignment_excess,
        min_pt_eigenvalue=c.min_pt_eigenvalue,
        label=c.label.value,
    )


def sweep(
    topology,
    alpha_values: Iterable[float],
    axis_parameter: str,
    grid: Sequence[float],
    fixed: Mapping[str, float] | None = None,
) -> list[SweepRecord]:
    """Evolve and classify the family at every ``(alpha, grid value)`` pair.

    Args:
        topology: a :class:`Topology` or its string name.
        alpha_values: family parameters, each in ``[2, 5]``.
        axis_parameter: which of ``p1``, ``p2``, ``p`` the grid drives.
        grid: axis values in ``[0, 1]``.
        fixed: values for the remaining parameters of the topology.
    """
    configs = [_config(topology, axis_parameter, x, fixed) for x in grid]
    return [record_at(a, cfg) for a in alpha_values for cfg in configs]


def _scan_grid(n: int) -> np.ndarray:
    # [0, 8/9] first, then (8/9, 1]; 8/9 is always a node
    return np.union1d(uniform_grid(n), [FULLY_DEPOLARIZED])


def find_crossing(
    topology,
    alpha: float,
    axis_parameter: str,
    fixed: Mapping[str, float] | None = None,
    scan_points: int = DEFAULT_GRID_POINTS,
    xtol: float = CROSSING_XTOL,
) -> CrossingResult | None:
    """First value of the axis where negativity drops to zero, or ``None``.

    A coarse scan locates the first NPT -> PPT transition; bisection then
    narrows the bracket to ``xtol``.
    """

    def is_npt(x):
        cfg = _config(topology, axis_parameter, x, fixed)
        return record_at(alpha, cfg).label == Label.NPT_FREE_ENTANGLED.value

    grid = _scan_grid(scan_points)
    flags = [is_npt(x) for x in grid]
    for i in range(len(grid) - 1):
        if flags[i] and not flags[i + 1]:
            lo, hi = float(grid[i]), float(grid[i + 1])
            break
    else:
        return None

    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if is_npt(mid):
            lo = mid
        else:
            hi = mid
    return CrossingResult(axis_parameter, 0.5 * (lo + hi), hi - lo, lo, hi)


def _refine_edge(pred, inside: float, outside: float, xtol: float) -> float:
    while abs(outside - inside) > xtol:
        mid = 0.5 * (inside + outside)
        if pred(mid):
            inside = mid
        else:
            outside = mid
    return float(0.5 * (inside + outside))


def bound_window(
    topology,
    alpha: float,
    axis_parameter: str,
    fixed: Mapping[str, float] | None = None,
    grid_points: int = DEFAULT_GRID_POINTS,
    xtol: float = WINDOW_XTOL,
) -> BoundWindow | None:
    """Longest contiguous axis interval on which only realignment detects entanglement.

    Returns ``None`` when no grid point is PPT with positive realignment excess.
    Interior edges are refined by bisection to ``xtol``; an edge sitting on the
    end of ``[0, 1]`` is reported as that end.
    """

    def is_bound(x):
        cfg = _config(topology, axis_parameter, x, fixed)
        return record_at(alpha, cfg).label == Label.PPT_BOUND_ENTANGLED.value

    grid = uniform_grid(grid_points)
    flags = [is_bound(x) for x in grid]

    best = None
    start = None
    for i, flag in enumerate(flags + [False]):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            if best is None or (i - start) > (best[1] - best[0] + 1):
                best = (start, i - 1)
            start = None
    if best is None:
        return None

    i0, i1 = best
    lower = float(grid[i0]) if i0 == 0 else _refine_edge(is_bound, grid[i0], grid[i0 - 1], xtol)
    last = len(grid) - 1
    upper = float(grid[i1]) if i1 == last else _refine_edge(is_bound, grid[i1], grid[i1 + 1], xtol)
    return BoundWindow(axis_parameter, lower, upper)


def global_spectrum_trace(alpha: float, p1: float, p2: float, p_grid: Sequence[float]) -> np.ndarray:
    """PT eigenvalues under global noise, one ascending row of nine per ``p``."""
    rho0 = horodecki_state(alpha)
    rows = [pt_spectrum(evolve(rho0, NoiseConfig(Topology.GLOBAL, p1, p2, p))) for p in p_grid]
    return np.array(rows).reshape(len(rows), 9)


def unitary_invariance_check(alpha: float, cfg: NoiseConfig) -> float:
    """Max spectral gap between the evolved family and its ``I (x) theta`` rotation."""
    rho0 = horodecki_state(alpha)
    original = pt_spectrum(evolve(rho0, cfg))
    rotated = pt_spectrum(evolve(apply_local_unitary(rho0), cfg))
    return float(np.max(np.abs(original - rotated)))


def local_a_crossings(alphas: Sequence[float], scan_points: int = 101) -> list[tuple[float, float | None]]:
    """``(alpha, p1 crossing or None)`` under noise on qutrit A alone."""
    out = []
    for a in alphas:
        res = find_crossing(Topology.LOCAL_A, a, "p1", scan_points=scan_points, xtol=1e-6)
        out.append((float(a), None if res is None else res.crossing_value))
    return out
