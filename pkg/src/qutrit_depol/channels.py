"""Qutrit depolarizing noise as Kraus maps, and two-qutrit evolution under it.

The single-qutrit channel uses the eight non-identity Weyl operators built
from the cyclic shift ``Y`` and the clock ``Z``::

    E0 = sqrt(1 - p) I,   Ek = sqrt(p / 8) W_k,
    W = (Y, Z, Y^2, YZ, Y^2 Z, Y Z^2, Y^2 Z^2, Z^2)

Matrices act on column vectors, so ``Y`` (rows (0,1,0), (0,0,1), (1,0,0))
sends |0> -> |2>, |1> -> |0>, |2> -> |1>. The channel only depends on the
set {W_k}, which is closed under ``Y -> Y^T``, so the convention does not
change any result.

Since the Weyl twirl gives ``sum_k W_k rho W_k^dagger = 3 tr(rho) I - rho``,
the channel is ``(1 - 9p/8) rho + (3p/8) tr(rho) I``: it hits the maximally
mixed state at ``p = 8/9`` and overshoots slightly for ``p > 8/9``.
The parameter relates to time by ``p = 1 - exp(-Gamma t / 2)``; only ``p``
is used here.

Collective noise takes all 81 products ``E_m (x) E_n``. Reading the
collective set as the nine diagonal pairs ``E_m (x) E_m`` would not be trace
preserving, since ``(1 - p)^2 + p^2 / 8 != 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IncompleteKrausSet, ParameterOutOfRange
from .numerics import as_matrix, max_abs
from .states import D, DensityMatrix, as_density_array

OMEGA = np.exp(2j * np.pi / 3)
COMPLETENESS_TOL = 1e-12


def shift_y() -> np.ndarray:
    return np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=complex)


def clock_z() -> np.ndarray:
    return np.diag([1.0, OMEGA, OMEGA**2]).astype(complex)


def weyl_generators() -> list[np.ndarray]:
    """The eight non-identity operators in Kraus order E1..E8."""
    y, z = shift_y(), clock_z()
    y2, z2 = y @ y, z @ z
    return [y, z, y2, y @ z, y2 @ z, y @ z2, y2 @ z2, z2]


@dataclass(frozen=True)
class KrausSet:
    """An ordered stack of Kraus operators, shape ``(n_ops, d, d)``."""

    operators: np.ndarray
    label: str = ""

    def __post_init__(self):
        ops = np.asarray(self.operators, dtype=complex)
        if ops.ndim != 3 or ops.shape[1] != ops.shape[2]:
            raise DimensionMismatch(f"Kraus stack must be (n, d, d), got {ops.shape}")
        object.__setattr__(self, "operators", ops)

    def __len__(self) -> int:
        return self.operators.shape[0]

    def __iter__(self):
        return iter(self.operators)

    @property
    def dim(self) -> int:
        return self.operators.shape[1]

    def completeness_deviation(self) -> float:
        """Max-entry norm of ``sum E^dagger E - I``."""
        ops = self.operators
        total = np.einsum("kji,kjl->il", ops.conj(), ops)
        return max_abs(total - np.eye(self.dim))


def check_probability(p: float, name: str = "p") -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterOutOfRange(f"{name}={p} outside [0, 1]")
    return p


def depolarizing_kraus(p: float) -> KrausSet:
    """Nine 3x3 Kraus operators of the qutrit depolarizing channel."""
    p = check_probability(p)
    ops = [np.sqrt(1 - p) * np.eye(D, dtype=complex)]
    ops += [np.sqrt(p / 8) * w for w in weyl_generators()]
    return KrausSet(np.stack(ops), label=f"depolarizing(p={p})")


def lift(k: KrausSet, side: str) -> KrausSet:
    """Embed single-qutrit operators as ``E (x) I`` (side A) or ``I (x) E`` (side B)."""
    if k.dim != D:
        raise DimensionMismatch(f"can only lift 3x3 operators, got {k.dim}x{k.dim}")
    eye = np.eye(D, dtype=complex)
    side = side.upper()
    if side == "A":
        ops = [np.kron(e, eye) for e in k]
    elif side == "B":
        ops = [np.kron(eye, e) for e in k]
    else:
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return KrausSet(np.stack(ops), label=f"{k.label}@{side}")


def collective_kraus(p: float) -> KrausSet:
    """All 81 products ``E_m (x) E_n`` of the single-qutrit set, m-major."""
    single = depolarizing_kraus(p).operators
    ops = np.einsum("mij,nkl->mnikjl", single, single).reshape(81, D * D, D * D)
    return KrausSet(ops, label=f"collective(p={float(p)})")


def apply_channel(rho, k: KrausSet) -> DensityMatrix:
    """``sum_i E_i rho E_i^dagger`` for a single- or two-qutrit state."""
    if isinstance(rho, DensityMatrix):
        m, dims = rho.matrix, rho.dims
    else:
        m = as_matrix(rho)
        dims = (D,) if m.shape == (D, D) else (D, D)
    if m.shape != (k.dim, k.dim):
        raise DimensionMismatch(f"state {m.shape} vs Kraus operators {k.dim}x{k.dim}")
    dev = k.completeness_deviation()
    if dev > COMPLETENESS_TOL:
        raise IncompleteKrausSet(f"completeness deviation {dev:.3e}")
    ops = k.operators
    out = np.einsum("kij,jl,kml->im", ops, m, ops.conj())
    return DensityMatrix(out, dims=dims)


class Topology(str, enum.Enum):
    LOCAL_A = "local-a"
    LOCAL_B = "local-b"
    MULTILOCAL = "multilocal"
    COLLECTIVE = "collective"
    GLOBAL = "global"

    @classmethod
    def parse(cls, value) -> "Topology":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        aliases = {"locala": "local-a", "localb": "local-b"}
        return cls(aliases.get(key, key))


# which of (p1, p2, p) each topology is allowed to use
ACTIVE_PARAMETERS = {
    Topology.LOCAL_A: ("p1",),
    Topology.LOCAL_B: ("p2",),
    Topology.MULTILOCAL: ("p1", "p2"),
    Topology.COLLECTIVE: ("p",),
    Topology.GLOBAL: ("p1", "p2", "p"),
}


@dataclass(frozen=True)
class NoiseConfig:
    """Coupling topology plus the decoherence parameters.

    ``p1`` and ``p2`` drive the independent environments of qutrits A and B,
    ``p`` the shared one. Parameters the topology does not use must be 0.
    """

    topology: Topology
    p1: float = 0.0
    p2: float = 0.0
    p: float = 0.0

    def __post_init__(self):
        topo = Topology.parse(self.topology)
        object.__setattr__(self, "topology", topo)
        for name in ("p1", "p2", "p"):
            value = check_probability(getattr(self, name), name)
            object.__setattr__(self, name, value)
            if name not in ACTIVE_PARAMETERS[topo] and value != 0.0:
                raise ParameterOutOfRange(f"{topo.value} noise does not use {name} (got {value})")

    def params(self) -> dict[str, float]:
        return {"p1": self.p1, "p2": self.p2, "p": self.p}

    def replace(self, **changes) -> "NoiseConfig":
        values = dict(topology=self.topology, **self.params())
        values.update(changes)
        return NoiseConfig(**values)


def noise_stages(cfg: NoiseConfig) -> list[KrausSet]:
    """Kraus sets in application order: A-local, B-local, collective."""
    active = ACTIVE_PARAMETERS[cfg.topology]
    stages = []
    if "p1" in active:
        stages.append(lift(depolarizing_kraus(cfg.p1), "A"))
    if "p2" in active:
        stages.append(lift(depolarizing_kraus(cfg.p2), "B"))
    if "p" in active:
        stages.append(collective_kraus(cfg.p))
    return stages


def evolve(rho0, cfg: NoiseConfig) -> DensityMatrix:
    """Evolve a two-qutrit state through every noise stage the topology switches on."""
    rho = DensityMatrix(as_density_array(rho0))
    for k in noise_stages(cfg):
        rho = apply_channel(rho, k)
    return rho
