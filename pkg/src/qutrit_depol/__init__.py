"""Entanglement of two qutrits under local, collective and global depolarizing noise."""

__version__ = "0.1.0"

from .channels import NoiseConfig, Topology, evolve  # noqa: E402
from .criteria import Label, classify, negativity, partial_transpose, realignment_excess  # noqa: E402
from .states import DensityMatrix, horodecki_state  # noqa: E402

__all__ = [
    "DensityMatrix",
    "Label",
    "NoiseConfig",
    "Topology",
    "classify",
    "evolve",
    "horodecki_state",
    "negativity",
    "partial_transpose",
    "realignment_excess",
]
